import pytest

from monowlp import fp_linalg
from monowlp._rank_py import rank_mod_p as python_rank


@pytest.fixture(params=["default", "python"])
def backend(request, monkeypatch):
    """Run a test against the active kernel and against the pure-Python one."""
    if request.param == "python":
        monkeypatch.setattr(fp_linalg, "_rank_kernel", python_rank)
    return request.param
