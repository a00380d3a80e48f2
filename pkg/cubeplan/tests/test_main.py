"""
Unit tests for the command-line interface.
"""

import io
import json
import os
import sys
import tempfile
import unittest
from unittest.mock import patch

# Add the project root to the path so the package can be imported
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

from cubeplan.main import main


class TestMain(unittest.TestCase):
    """Test cases for the cubeplan command line."""

    def setUp(self):
        """Set up test fixtures."""
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.env = patch.dict(os.environ, {}, clear=True)
        self.env.start()
        self.addCleanup(self.env.stop)

    def _path(self, name: str) -> str:
        return os.path.join(self.tmp.name, name)

    def _write(self, name: str, data) -> str:
        path = self._path(name)
        with open(path, 'w') as f:
            json.dump(data, f)
        return path

    def _run(self, *argv):
        """Run the CLI and return (exit code, stdout, stderr)."""
        with patch('sys.stdout', new_callable=io.StringIO) as out, \
                patch('sys.stderr', new_callable=io.StringIO) as err:
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def _error(self, stderr: str) -> dict:
        return json.loads(stderr.strip().splitlines()[-1])

    def test_pip_export(self):
        """Test exporting an arm poset."""
        code, out, _ = self._run('pip', 'export', '--type', 'quadrant', '--n', '2')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data['elements'], ['0,0', '1,0', '1,1'])
        self.assertEqual(data['inconsistent'], [])

    def test_pip_show_and_reroot(self):
        """Test printing and rerooting a PIP file."""
        path = self._write('chain.pip.json', {'elements': ['a', 'b'], 'covers': [['a', 'b']]})
        code, out, _ = self._run('pip', 'show', path)
        self.assertEqual(code, 0)
        self.assertIn('  a < b', out)

        code, out, _ = self._run('pip', 'reroot', path, '--at', 'a')
        self.assertEqual(code, 0)
        self.assertIn('  a ..... b', out)

        target = self._path('out/rerooted.pip.json')
        code, _, _ = self._run('pip', 'reroot', path, '--at', 'a', '--output', target)
        self.assertEqual(code, 0)
        with open(target) as f:
            self.assertEqual(json.load(f)['inconsistent'], [['a', 'b']])

    def test_pip_validate(self):
        """Test the validation exit codes."""
        good = self._write('good.pip.json', {'elements': ['a', 'b'], 'inconsistent': [['a', 'b']]})
        code, out, _ = self._run('pip', 'validate', good)
        self.assertEqual(code, 0)
        self.assertEqual(out, 'ok: 2 elements\n')

        bad = self._write('bad.pip.json', {
            'elements': ['a', 'b', 'c'],
            'covers': [['a', 'c'], ['b', 'c']],
            'inconsistent': [['a', 'b']],
        })
        code, out, err = self._run('pip', 'validate', bad, '--json')
        self.assertEqual(code, 2)
        self.assertEqual(json.loads(out)['axiom'], 'axiom 1')
        self.assertEqual(self._error(err)['error'], 'PipError')

    def test_missing_file(self):
        """Test that a missing input file is a validation error."""
        code, _, err = self._run('pip', 'show', self._path('missing.pip.json'))
        self.assertEqual(code, 2)
        self.assertEqual(self._error(err)['error'], 'FileNotFoundError')

    def test_robot_plan_json(self):
        """Test planning the two-link arm."""
        code, out, _ = self._run('robot', 'plan', '--type', 'quadrant', '--n', '2',
                                 '--from', '', '--to', '12', '--json')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), {
            'start': {'n': 2, 'verticals': []},
            'goal': {'n': 2, 'verticals': [1, 2]},
            'metric': 'steps',
            'steps': [['enter@2'], ['hop_left@2'], ['enter@2']],
            'length': 3,
        })

    def test_robot_plan_text(self):
        """Test the human-readable plan."""
        code, out, _ = self._run('robot', 'plan', '--type', 'quadrant', '--n', '3',
                                 '--from', '2', '--to', '13', '--verify')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'quadrant n=3: 2 -> 13 (steps): 1 step(s), 2 move(s)')
        self.assertEqual(lines[1], '  0  ENE')
        self.assertTrue(lines[2].startswith('  1  NEN  <- '))
        self.assertEqual(lines[3], 'replay: ok (2 states)')

    def test_robot_plan_enumerate(self):
        """Test listing the plans with the fewest moves."""
        code, out, _ = self._run('robot', 'plan', '--type', 'quadrant', '--n', '3',
                                 '--from', '2', '--to', '13', '--enumerate', '--json')
        self.assertEqual(code, 0)
        self.assertEqual(len(json.loads(out)), 2)

    def test_robot_plan_errors(self):
        """Test rejected metrics and states."""
        code, _, err = self._run('robot', 'plan', '--type', 'quadrant', '--n', '2',
                                 '--from', '', '--to', '1', '--metric', 'euclidean')
        self.assertEqual(code, 2)
        self.assertEqual(self._error(err)['error'], 'ValidationError')

        code, _, err = self._run('robot', 'plan', '--type', 'strip', '--n', '3',
                                 '--from', '', '--to', '12')
        self.assertEqual(code, 2)
        self.assertEqual(self._error(err)['error'], 'StateError')

    def test_robot_verify(self):
        """Test replaying a saved plan."""
        target = self._path('plan.json')
        code, _, _ = self._run('robot', 'plan', '--type', 'strip', '--n', '4',
                               '--from', '', '--to', '14', '--output', target)
        self.assertEqual(code, 0)
        code, out, _ = self._run('robot', 'verify', '--plan', target, '--type', 'strip')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('ok: '))

        with open(target) as f:
            data = json.load(f)
        data['steps'] = data['steps'][:-1]
        data['length'] -= 1
        broken = self._write('broken.json', data)
        code, _, err = self._run('robot', 'verify', '--plan', broken, '--type', 'strip')
        self.assertEqual(code, 2)
        self.assertEqual(self._error(err)['error'], 'PlanError')

    def test_robot_system(self):
        """Test writing a system description."""
        code, out, _ = self._run('robot', 'system', '--type', 'quadrant', '--n', '2')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data['graph']['vertices'], ['1', '2'])
        self.assertEqual(data['seed'], {'1': 'E', '2': 'E'})

    def test_count_cubes(self):
        """Test the cube count table."""
        code, out, _ = self._run('count', 'cubes', '--type', 'strip', '--n', '1', '2')
        self.assertEqual(code, 0)
        self.assertEqual(out, 'n,d,count\n1,0,2\n1,1,1\n2,0,3\n2,1,2\n')

    def test_count_states(self):
        """Test the state count table."""
        code, out, _ = self._run('count', 'states', '--type', 'quadrant', '--n', '3')
        self.assertEqual(code, 0)
        self.assertEqual(out, 'n,states\n3,8\n')

    def test_count_fvector(self):
        """Test comparing f-vectors with the series."""
        code, out, _ = self._run('count', 'fvector', '--type', 'quadrant', '--n', '3', '--json')
        self.assertEqual(code, 0)
        records = json.loads(out)
        self.assertEqual([r['fvector'] for r in records], [8, 8, 1, 0])
        self.assertTrue(all(r['match'] for r in records))

    def test_check_cat0(self):
        """Test deciding CAT(0) for built-in systems."""
        code, out, _ = self._run('complex', 'check-cat0', '--type', 'quadrant', '--n', '2')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('quadrant-2: CAT(0), 4 states, PIP with 3 elements'))

        code, out, _ = self._run('complex', 'check-cat0', '--type', 'snake', '--n', '1',
                                 '--rows', '1', '--cols', '1')
        self.assertEqual(code, 4)
        self.assertIn('not CAT(0)', out)

    def test_check_cat0_from_file(self):
        """Test reading a system file and a custom root."""
        target = self._path('quadrant.json')
        self._run('robot', 'system', '--type', 'quadrant', '--n', '2', '--output', target)
        code, out, _ = self._run('complex', 'check-cat0', '--system', target, '--root', '1=N;2=E', '--json')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertTrue(data['cat0'])
        self.assertEqual(len(data['pip']['elements']), 3)

    def test_complex_show(self):
        """Test summarizing X(P) of a PIP file."""
        path = self._write('square.pip.json', {'elements': ['a', 'b']})
        code, out, _ = self._run('complex', 'show', '--pip', path, '--json')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data['f_vector'], [4, 4, 1])
        self.assertTrue(data['connected'])

    def test_complex_show_pads_arm_f_vector(self):
        """Test that an arm f-vector runs up to dimension n even when the top entries are zero."""
        code, out, _ = self._run('complex', 'show', '--type', 'quadrant', '--n', '2', '--json')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['f_vector'], [4, 3, 0])

        code, out, _ = self._run('complex', 'show', '--type', 'strip', '--n', '1', '--json')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['f_vector'], [2, 1])

    def test_check_cat0_complex_file(self):
        """Test deciding CAT(0) for a saved cube complex."""
        pip = self._write('square.pip.json', {'elements': ['a', 'b']})
        target = self._path('square.complex.json')
        code, _, _ = self._run('complex', 'show', '--pip', pip, '--output', target)
        self.assertEqual(code, 0)

        code, out, _ = self._run('complex', 'check-cat0', '--complex', target, '--json')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertTrue(data['cat0'])
        self.assertEqual(data['states'], 4)
        self.assertEqual(len(data['pip']['elements']), 2)

        code, out, _ = self._run('complex', 'check-cat0', '--complex', target, '--root', '3')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('square.complex: CAT(0), 4 states, PIP with 2 elements'))

        code, _, err = self._run('complex', 'check-cat0', '--complex', target, '--root', '9')
        self.assertEqual(code, 2)
        self.assertEqual(self._error(err)['error'], 'ValidationError')

    def test_check_cat0_complex_file_errors(self):
        """Test an empty square and a malformed complex file."""
        cycle = self._write('cycle.json', {'vertices': [0, 1, 2, 3],
                                           'cubes': [[0, 1], [1, 2], [2, 3], [0, 3]], 'root': 0})
        code, out, _ = self._run('complex', 'check-cat0', '--complex', cycle)
        self.assertEqual(code, 4)
        self.assertIn('not CAT(0)', out)

        bad = self._write('bad.json', {'vertices': [0, 1, 2], 'cubes': [[0, 1, 2]], 'root': 0})
        code, _, err = self._run('complex', 'check-cat0', '--complex', bad)
        self.assertEqual(code, 2)
        self.assertEqual(self._error(err)['error'], 'ValidationError')

    def test_snake_system_file(self):
        """Test that a snake read from its system file explores the same complex."""
        target = self._path('snake.json')
        code, _, _ = self._run('robot', 'system', '--type', 'snake', '--n', '3',
                               '--rows', '2', '--cols', '3', '--output', target)
        self.assertEqual(code, 0)
        with open(target) as f:
            self.assertEqual(json.load(f)['constraint'], {'kind': 'snake', 'length': 3, 'rows': 2, 'cols': 3})

        _, from_file, _ = self._run('complex', 'show', '--system', target, '--json')
        _, built_in, _ = self._run('complex', 'show', '--type', 'snake', '--n', '3',
                                   '--rows', '2', '--cols', '3', '--json')
        self.assertEqual(json.loads(from_file), json.loads(built_in))

    def test_repeated_runs_match(self):
        """Test that running a command twice prints the same bytes."""
        pip = self._write('chain.pip.json', {'elements': ['a', 'b', 'c'], 'covers': [['a', 'b']],
                                             'inconsistent': [['b', 'c']]})
        commands = [
            ('pip', 'reroot', pip, '--at', 'a'),
            ('pip', 'reroot', pip, '--at', 'a', 'c', '--json'),
            ('robot', 'plan', '--type', 'strip', '--n', '6', '--from', '', '--to', '146', '--json'),
            ('robot', 'plan', '--type', 'quadrant', '--n', '4', '--from', '13', '--to', '24',
             '--metric', 'moves', '--json'),
            ('count', 'cubes', '--type', 'quadrant', '--n', '1', '2', '3', '4'),
            ('complex', 'check-cat0', '--type', 'strip', '--n', '4', '--json'),
        ]
        for argv in commands:
            first = self._run(*argv)
            second = self._run(*argv)
            self.assertEqual(first[0], 0, msg=' '.join(argv))
            self.assertEqual(first[1], second[1], msg=' '.join(argv))

    def test_repeated_outputs_match(self):
        """Test that written files are byte-identical across runs."""
        pip = self._write('chain.pip.json', {'elements': ['a', 'b'], 'covers': [['a', 'b']]})
        written = []
        for k in range(2):
            plan = self._path(f'plan{k}.json')
            table = self._path(f'cubes{k}.csv')
            rerooted = self._path(f'rerooted{k}.pip.json')
            self._run('robot', 'plan', '--type', 'strip', '--n', '5', '--from', '', '--to', '135',
                      '--output', plan)
            self._run('count', 'cubes', '--type', 'strip', '--n', '3', '5', '--output', table)
            self._run('pip', 'reroot', pip, '--at', 'a', '--output', rerooted)
            contents = []
            for path in (plan, table, rerooted):
                with open(path, 'rb') as f:
                    contents.append(f.read())
            written.append(contents)
        self.assertTrue(all(written[0]))
        self.assertEqual(written[0], written[1])

    def test_cap_exceeded(self):
        """Test the exit code when a cap is hit."""
        code, _, err = self._run('count', 'states', '--type', 'quadrant', '--n', '4', '--max-states', '5')
        self.assertEqual(code, 3)
        self.assertEqual(self._error(err)['error'], 'CapExceededError')


if __name__ == '__main__':
    unittest.main()
