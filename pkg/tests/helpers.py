"""Shared test utilities."""

from superschur import Superalgebra


def change_basis(L, perm, scales):
    """Rebuild the table for b'_i = scales[i] * b_perm[i].

    perm must preserve parity blocks (evens to evens, odds to odds);
    scales are nonzero scalars of L's field.
    """
    total = L.dims.total
    inv = {perm[i]: i for i in range(total)}
    entries = []
    for i in range(total):
        for j in range(i, total):
            t = L.bracket_basis(perm[i], perm[j])
            if t is None or not any(t):
                continue
            vec = [L.field.zero] * total
            for k, c in enumerate(t):
                if c:
                    vec[inv[k]] = scales[i] * scales[j] / scales[inv[k]] * c
            entries.append(((i, j), vec))
    return Superalgebra.from_entries(L.field, L.dims, entries, name=L.name + "~")


def random_parity_basis_change(rng, L):
    """A random in-parity permutation and random nonzero scales."""
    m, total = L.dims.even, L.dims.total
    perm = list(range(m))
    rng.shuffle(perm)
    podd = list(range(m, total))
    rng.shuffle(podd)
    perm += podd
    if L.field.is_rational:
        pool = [1, 2, 3, 5, -1, -2, -3]
    else:
        pool = list(range(1, L.field.p))
    scales = [L.field.of(rng.choice(pool)) for _ in range(total)]
    return perm, scales
