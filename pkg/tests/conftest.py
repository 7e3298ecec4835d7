from fractions import Fraction

import pytest
from hypothesis import strategies as st

from moretbailly.exact import PPoly

small_fraction = st.builds(
    Fraction,
    st.integers(min_value=-12, max_value=12),
    st.integers(min_value=1, max_value=6),
)
small_poly = st.lists(small_fraction, min_size=0, max_size=5).map(PPoly)


@pytest.fixture
def run_cli(capsys):
    from moretbailly.cli import main

    def _run(*argv):
        code = main([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
