import numpy as np
import pytest


@pytest.fixture(scope="session")
def direct_variances():
    """Var(x), Var(p) computed directly on the matrix representation.

    Independent of the library's expectation-sum formulas: builds the
    bosonic ladder on a zero-padded window and contracts x, x^2, p, p^2
    against the state vector.
    """

    def compute(amplitudes: np.ndarray, pad: int = 3):
        v = np.zeros(amplitudes.size + pad, dtype=complex)
        v[: amplitudes.size] = amplitudes
        dim = v.size
        lower = np.zeros((dim, dim), dtype=complex)
        lower[np.arange(dim - 1), np.arange(1, dim)] = np.sqrt(np.arange(1, dim))
        x = (lower.conj().T + lower) / np.sqrt(2)
        p = 1j * (lower.conj().T - lower) / np.sqrt(2)
        var_x = (v.conj() @ x @ x @ v - (v.conj() @ x @ v) ** 2).real
        var_p = (v.conj() @ p @ p @ v - (v.conj() @ p @ v) ** 2).real
        return float(var_x), float(var_p)

    return compute
