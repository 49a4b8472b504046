"""Shared fixtures for the solver tests"""

import logging

import pytest

from models import CpGame, new_game
from verify import TableGame


@pytest.fixture(autouse=True)
def default_limits(monkeypatch):
    """Tests run against the built-in enumeration limits"""
    monkeypatch.delenv('CPG_LIMIT', raising=False)
    monkeypatch.delenv('CPG_ENV', raising=False)


@pytest.fixture(autouse=True)
def root_logging():
    """The CLI reconfigures the root logger; put it back after each test"""
    root = logging.getLogger()
    before, level = list(root.handlers), root.level
    yield
    for handler in list(root.handlers):
        if type(handler) is logging.StreamHandler and handler not in before:
            root.removeHandler(handler)
    root.setLevel(level)


@pytest.fixture
def game_235() -> CpGame:
    return new_game([2, 3, 5])


@pytest.fixture
def game_23() -> CpGame:
    return new_game([2, 3])


@pytest.fixture
def weight_one_table() -> TableGame:
    """Two weight-1 players: v(∅)=0 and every nonempty coalition is worth 1"""
    return TableGame.from_mapping(2, {0: 0, 1: 1, 2: 1, 3: 1})


@pytest.fixture
def write_file(tmp_path):
    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write
