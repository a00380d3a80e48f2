"""
State coders: translate between system states and ideals of the planning PIP.
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, Type

from ..arms.posets import q_ideal_to_state, q_state_to_ideal, qp_pip, s_ideal_to_state, s_state_to_ideal, sp_pip
from ..arms.states import ArmState, QuadrantState, StripState
from ..arms.systems import robot_system
from ..complexes import Reconstruction
from ..config.constants import QUADRANT, STRIP
from ..core.exceptions import PipError, StateError, ValidationError
from ..pips import Pip
from ..reconfig import Exploration, ReconfigSystem, RState


class StateCoder(ABC):
    """Base class: a PIP whose consistent ideals are the states of a system.

    Subclasses supply the bijection in both directions; the dictionary
    form and the description default to the generic system state.
    """

    system: ReconfigSystem
    pip: Pip

    @abstractmethod
    def encode(self, state: RState) -> int:
        """The consistent ideal of a system state.

        Raises:
            StateError: If the state is not a state of the system
        """
        pass

    @abstractmethod
    def decode(self, ideal: int) -> RState:
        """The system state of a consistent ideal.

        Raises:
            PipError: If the bitset is not a consistent ideal
        """
        pass

    def state_to_dict(self, state: RState) -> Any:
        return state.to_dict()

    def state_from_dict(self, data: Any) -> RState:
        if not isinstance(data, dict):
            raise StateError(f"state must be an object of vertex labels, got {data!r}")
        return self.system.validate_state(RState.from_mapping(data))

    def describe(self, state: RState) -> str:
        return state.encode()


class ArmCoder(StateCoder):
    """Closed-form bijection between arm states and ideals of QP_n or SP_n."""

    def __init__(self, kind: str, n: int):
        if kind == QUADRANT:
            self.state_class: Type[ArmState] = QuadrantState
            self.pip = qp_pip(n)
            self._to_ideal, self._to_state = q_state_to_ideal, q_ideal_to_state
        elif kind == STRIP:
            self.state_class = StripState
            self.pip = sp_pip(n)
            self._to_ideal, self._to_state = s_state_to_ideal, s_ideal_to_state
        else:
            raise ValidationError(f"unknown robot type '{kind}'")
        self.kind = kind
        self.n = n
        self.system = robot_system(kind, n)

    def arm_state(self, state: RState) -> ArmState:
        return self.state_class.from_rstate(self.system.validate_state(state), self.n)

    def encode(self, state: RState) -> int:
        return self._to_ideal(self.arm_state(state))

    def decode(self, ideal: int) -> RState:
        return self._to_state(self.n, ideal).to_rstate()

    def state_to_dict(self, state: RState) -> Dict[str, Any]:
        return self.arm_state(state).to_dict()

    def state_from_dict(self, data: Any) -> RState:
        if not isinstance(data, dict):
            raise StateError(f"arm state must be an object with 'n' and 'verticals', got {data!r}")
        arm = self.state_class.from_dict(data)
        if arm.n != self.n:
            raise StateError(f"state has length {arm.n}, expected {self.n}")
        return arm.to_rstate()

    def describe(self, state: RState) -> str:
        return self.arm_state(state).links()


class ReconstructionCoder(StateCoder):
    """Coder read off a reconstructed state complex: a state is the ideal of hyperplanes separating it from the seed."""

    def __init__(self, exploration: Exploration, reconstruction: Reconstruction):
        self.system = exploration.system
        self.pip = reconstruction.pip
        self.exploration = exploration
        self.reconstruction = reconstruction

    def encode(self, state: RState) -> int:
        state = self.system.validate_state(state)
        try:
            vertex = self.exploration.index[state]
        except KeyError:
            raise StateError(f"state {state.encode()} is not reachable from the seed") from None
        return self.reconstruction.vertex_ideals[vertex]

    def decode(self, ideal: int) -> RState:
        try:
            return self.exploration.states[self.reconstruction.ideal_vertices[ideal]]
        except KeyError:
            raise PipError(f"{{{', '.join(self.pip.members(ideal))}}} is not a state of the system") from None
