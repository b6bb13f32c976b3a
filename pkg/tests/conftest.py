import contextlib
import io as _io
import json

import numpy as np
import pytest

from hypothesis import settings

# numba compilation on a cold cache can make the first example of a
# property test arbitrarily slow; wall-clock deadlines are meaningless here
settings.register_profile("cogl", deadline=None, derandomize=True)
settings.load_profile("cogl")


def run_cli(argv):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr).

    Redirection is explicit rather than via capsys so it works under any
    pytest capture mode.
    """
    from cogl.cli import main

    out = _io.StringIO()
    err = _io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(argv)
        except SystemExit as e:  # argparse exits on usage errors
            code = e.code if isinstance(e.code, int) else 1
    return code, out.getvalue(), err.getvalue()


def write_spec(path, dim, mean=0.0, cov=None):
    obj = {"dim": dim, "mean": mean,
           "cov": cov if cov is not None else {"isotropic": 1.0}}
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def unit_spec_file(tmp_path):
    return write_spec(tmp_path / "spec.json", 8)


def random_latents(seed, count, dim, loc=0.0, scale=1.0):
    g = np.random.default_rng(seed)
    return [g.normal(loc, scale, dim) for _ in range(count)]
