import os


FIXTURES_DIR = os.path.dirname(__file__)

LATTICE_FILES = (
    "b2.lat",
    "c3.lat",
    "figure1.lat",
    "m3.lat",
    "n5.lat",
    "singleton.lat",
)


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES_DIR, name)
