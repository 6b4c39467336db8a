import math

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, a, b, tol=1e-10, max_iter=200):
    """Maximize ``f`` on ``[a, b]`` by golden-section search.

    Uses comparisons only, so ``f`` may return ``-inf`` at infeasible
    points. Returns ``(x, f(x))`` for the best point evaluated.
    """
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    best = max((f1, -x1), (f2, -x2))
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
            best = max(best, (f1, -x1))
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
            best = max(best, (f2, -x2))
    return -best[1], best[0]
