import pytest

from pumpkit import BUILTINS, PdaDocument, dumps


@pytest.fixture
def dyck1():
    return BUILTINS["DYCK1"].pda


@pytest.fixture
def reg_ab():
    return BUILTINS["REG_AB"].pda


@pytest.fixture
def anbn():
    return BUILTINS["ANBN"].pda


@pytest.fixture
def gen_pal():
    return BUILTINS["GEN_PAL"].pda


@pytest.fixture
def dyck1_file(tmp_path):
    path = tmp_path / "dyck1.json"
    entry = BUILTINS["DYCK1"]
    path.write_text(dumps(PdaDocument(entry.pda, entry.name)), encoding="utf-8")
    return str(path)
