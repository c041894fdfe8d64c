from abc_justness.sos.derivations import (
    Derivation,
    ParL,
    ParR,
    RecD,
    RelD,
    ResD,
    SumL,
    SumR,
    Sync,
)
from abc_justness.syntax.terms import is_receive


def _receives(d: Derivation) -> bool:
    return is_receive(d.label)


def concurrent_oneway(chi: Derivation, zeta: Derivation) -> bool:
    """
    Whether ``chi`` stays possible while ``zeta`` happens.

    The relation is the least one closed under the generating clauses; each clause
    strictly decomposes both arguments, so plain structural recursion decides it.
    Derivations with different sources are never related.

    Parameters
    ----------
    chi
        Derivation whose enabledness is in question
    zeta
        Derivation being performed

    Returns
    -------
    bool
        ``True`` iff ``chi`` is concurrent with ``zeta`` in this direction

    Examples
    --------
    >>> from abc_justness.sos.derivations import PrefixD
    >>> from abc_justness.syntax.terms import NIL, Handshake, Prefix
    >>> a, c = Prefix(Handshake('a'), NIL), Prefix(Handshake('c'), NIL)
    >>> concurrent_oneway(ParL(PrefixD(Handshake('a'), NIL), c), ParR(a, PrefixD(Handshake('c'), NIL)))
    True
    """
    match chi, zeta:
        case SumL(x, p), SumL(z, q) if p == q:
            return concurrent_oneway(x, z)
        case SumR(p, x), SumR(q, z) if p == q:
            return concurrent_oneway(x, z)
        case ResD(x, c), ResD(z, e) if c == e:
            return concurrent_oneway(x, z)
        case RelD(x, f), RelD(z, g) if f == g:
            return concurrent_oneway(x, z)
        case RecD(a, x), RecD(b, z) if a == b:
            return concurrent_oneway(x, z)

        # Opposite sides of a parallel composition.
        case ParL(x, q), ParR(p, z):
            return x.src == p and z.src == q
        case ParR(p, x), ParL(z, q):
            return z.src == p and x.src == q

        # Same side.
        case ParL(x, p), ParL(z, q) if p == q:
            return concurrent_oneway(x, z)
        case ParR(p, x), ParR(q, z) if p == q:
            return concurrent_oneway(x, z)

        # A synchronisation against one side moving alone.
        case Sync(x, s), ParR(p, z):
            return x.src == p and ((s.src == z.src and _receives(s)) or concurrent_oneway(s, z))
        case Sync(s, x), ParL(z, p):
            return x.src == p and ((s.src == z.src and _receives(s)) or concurrent_oneway(s, z))
        case ParL(x, p), Sync(z, e):
            return p == e.src and concurrent_oneway(x, z)
        case ParR(p, x), Sync(e, z):
            return p == e.src and concurrent_oneway(x, z)

        case Sync(x, s), Sync(z, e):
            left_conc = concurrent_oneway(x, z)
            right_conc = concurrent_oneway(s, e)
            return (
                (left_conc and right_conc)
                or (left_conc and s.src == e.src and _receives(s))
                or (right_conc and x.src == z.src and _receives(x))
            )

        case _:
            return False


def concurrent(chi: Derivation, zeta: Derivation) -> bool:
    """Symmetric core: each derivation stays possible while the other happens."""
    return concurrent_oneway(chi, zeta) and concurrent_oneway(zeta, chi)
