"""Configuration for the cubeplan package."""
