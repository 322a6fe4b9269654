"""Example cones and dimer models shipped with the package."""
import json
from importlib import resources


def fixture_path(name: str):
    """Path of a shipped fixture; the ``.json`` suffix is optional."""
    if not name.endswith(".json"):
        name += ".json"
    return resources.files(__name__) / name


def load_fixture(name: str):
    return json.loads(fixture_path(name).read_text())
