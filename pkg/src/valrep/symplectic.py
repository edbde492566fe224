"""Symplectic linear algebra over an exact ordered field.

K^{2n} carries the standard symplectic form <(x1,y1),(x2,y2)> = x1.y2 -
x2.y1, i.e. the Gram matrix J = [[0, I], [-I, 0]].  Lagrangians are
n-dimensional isotropic subspaces, stored in a reduced column echelon
canonical form so that equality is structural.

The Maslov index of a triple of Lagrangians is the signature of the
quadratic form (x1,x2,x3) -> <x1,x2> + <x2,x3> + <x3,x1>, computed by
exact congruence diagonalization; sign decisions over Q(X) are delegated
to an OrderSpec.  The orientation convention is fixed so that the n = 1
triple span(1,0), span(1,1), span(0,1) has index +1.

The crossratio of a quadruple (l1 transverse l2, l3 transverse l4) is
det(p_{l1}^{par l2} . p_{l3}^{par l4} restricted to l1); the determinant
does not depend on the basis chosen for l1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import OrderSpec, element_sign
from .linalg import Matrix


class IsotropyError(ValueError):
    pass


class TransversalityError(ValueError):
    pass


@dataclass(frozen=True)
class SymplecticForm:
    """The standard form on K^{2n}, determined by the half-dimension n."""

    n: int

    def gram(self, one=Fraction(1)) -> Matrix:
        n = self.n
        zero = one * 0
        rows = []
        for i in range(2 * n):
            row = [zero] * (2 * n)
            if i < n:
                row[n + i] = one
            else:
                row[i - n] = -one
            rows.append(row)
        return Matrix(rows)


def symplectic_pairing(u, v):
    """<u, v> for coordinate vectors of length 2n."""
    if len(u) != len(v) or len(u) % 2:
        raise ValueError("vectors must share an even length")
    n = len(u) // 2
    acc = u[0] * v[n] - u[n] * v[0]
    for i in range(1, n):
        acc = acc + u[i] * v[n + i] - u[n + i] * v[i]
    return acc


def is_symplectic(g: Matrix, form: SymplecticForm | None = None) -> bool:
    """Exact test of t(g) J g = J."""
    if not g.is_square or g.rows % 2:
        raise ValueError("symplectic matrices have even size")
    n = g.rows // 2
    if form is not None and form.n != n:
        raise ValueError("form dimension does not match the matrix")
    j = SymplecticForm(n).gram(g.one())
    return g.transpose() @ j @ g == j


def symplectic_inverse(g: Matrix) -> Matrix:
    """g^{-1} = J^{-1} t(g) J for symplectic g (cheaper than elimination)."""
    n = g.rows // 2
    j = SymplecticForm(n).gram(g.one())
    return (-j) @ g.transpose() @ j


class Lagrangian:
    """An n-dimensional isotropic subspace of K^{2n} in canonical form.

    The canonical basis matrix is 2n x n; its transpose is in reduced row
    echelon form, which makes the representative unique per subspace.
    """

    __slots__ = ("basis", "n")

    def __init__(self, basis: Matrix, _canonical: bool = False):
        if not _canonical:
            raise TypeError("use Lagrangian.span() to construct")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "n", basis.cols)

    def __setattr__(self, name, value):
        raise AttributeError("Lagrangian is immutable")

    @classmethod
    def span(cls, vectors: Matrix) -> "Lagrangian":
        """Canonicalize the column span; validates rank and isotropy."""
        if vectors.rows % 2 or vectors.cols != vectors.rows // 2:
            raise ValueError(f"expected a 2n x n matrix, got {vectors.rows}x{vectors.cols}")
        n = vectors.cols
        reduced, pivots = vectors.transpose().rref()
        if len(pivots) != n:
            raise ValueError("vectors do not span an n-dimensional subspace")
        basis = Matrix(reduced.entries[:n]).transpose()
        for i in range(n):
            u = basis.column(i)
            for j in range(i + 1, n):
                if symplectic_pairing(u, basis.column(j)) != 0:
                    raise IsotropyError("subspace is not isotropic")
        return cls(basis, _canonical=True)

    @classmethod
    def horizontal(cls, n: int, one=Fraction(1)) -> "Lagrangian":
        return cls.span(Matrix.identity(2 * n, one).submatrix(range(2 * n), range(n)))

    @classmethod
    def vertical(cls, n: int, one=Fraction(1)) -> "Lagrangian":
        return cls.span(Matrix.identity(2 * n, one).submatrix(range(2 * n), range(n, 2 * n)))

    @classmethod
    def graph(cls, s: Matrix) -> "Lagrangian":
        """The graph {(v, Sv)} of a symmetric n x n matrix S."""
        if s != s.transpose():
            raise IsotropyError("graph Lagrangians need a symmetric matrix")
        n = s.rows
        eye = Matrix.identity(n, s.one())
        return cls.span(Matrix(list(eye.entries) + list(s.entries)))

    @classmethod
    def line(cls, slope) -> "Lagrangian":
        """n = 1 convenience: span(1, slope); None means the vertical line."""
        from .fields import RatFunc

        if slope is None:
            return cls.vertical(1)
        if isinstance(slope, RatFunc):
            return cls.span(Matrix([[RatFunc.coerce(1)], [slope]]))
        return cls.span(Matrix([[Fraction(1)], [Fraction(slope)]]))

    def __eq__(self, other) -> bool:
        return isinstance(other, Lagrangian) and self.basis == other.basis

    def __hash__(self):
        return hash(("Lagrangian", self.basis))

    def __repr__(self):
        return f"Lagrangian({self.basis!r})"

    def apply(self, g: Matrix) -> "Lagrangian":
        """The image subspace g . self, canonicalized."""
        return Lagrangian.span(g @ self.basis)

    def transverse(self, other: "Lagrangian") -> bool:
        if self.n != other.n:
            raise ValueError("Lagrangians live in different dimensions")
        return self.basis.hstack(other.basis).rank() == 2 * self.n


def transverse(l1: Lagrangian, l2: Lagrangian) -> bool:
    return l1.transverse(l2)


def lagrangian_span(vectors: Matrix) -> Lagrangian:
    return Lagrangian.span(vectors)


def signature(sym: Matrix, order: OrderSpec | None = None) -> tuple[int, int, int]:
    """(positives, negatives, zeros) of a symmetric matrix by congruence.

    Symmetric Gaussian elimination with the classical 2x2 fix: when the
    whole remaining diagonal vanishes, a row/column addition turns a
    nonzero off-diagonal entry into a nonzero diagonal one (char 0).
    """
    if sym != sym.transpose():
        raise ValueError("signature needs a symmetric matrix")
    m = [list(row) for row in sym.entries]
    size = sym.rows
    pos = neg = zero = 0
    i = 0

    def sym_swap(a, b):
        m[a], m[b] = m[b], m[a]
        for row in m:
            row[a], row[b] = row[b], row[a]

    def sym_add(dst, src):
        # row_dst += row_src, then col_dst += col_src
        m[dst] = [x + y for x, y in zip(m[dst], m[src])]
        for row in m:
            row[dst] = row[dst] + row[src]

    while i < size:
        if m[i][i] == 0:
            j = next((k for k in range(i + 1, size) if m[k][k] != 0), None)
            if j is not None:
                sym_swap(i, j)
            else:
                pair = next(
                    ((a, b) for a in range(i, size) for b in range(a + 1, size) if m[a][b] != 0),
                    None,
                )
                if pair is None:
                    zero += size - i
                    break
                a, b = pair
                sym_add(a, b)
                if a != i:
                    sym_swap(i, a)
        pivot = m[i][i]
        for k in range(i + 1, size):
            if m[k][i] != 0:
                f = m[k][i] / pivot
                m[k] = [x - f * y for x, y in zip(m[k], m[i])]
                for row in m:
                    row[k] = row[k] - f * row[i]
        s = element_sign(pivot, order)
        if s > 0:
            pos += 1
        else:
            neg += 1
        i += 1
    return pos, neg, zero


def maslov_gram(l1: Lagrangian, l2: Lagrangian, l3: Lagrangian) -> Matrix:
    """Gram matrix (up to a harmless global factor 2) of the Maslov form."""
    n = l1.n
    if not (l2.n == n and l3.n == n):
        raise ValueError("Lagrangians live in different dimensions")
    b1, b2, b3 = l1.basis, l2.basis, l3.basis
    zero = b1.zero_entry()

    def pair_block(a: Matrix, b: Matrix) -> list[list]:
        return [
            [symplectic_pairing(a.column(i), b.column(j)) for j in range(n)]
            for i in range(n)
        ]

    m12 = pair_block(b1, b2)
    m23 = pair_block(b2, b3)
    m13 = pair_block(b1, b3)
    rows = []
    for i in range(n):
        rows.append([zero] * n + m12[i] + [-c for c in m13[i]])
    for j in range(n):
        rows.append([m12[i][j] for i in range(n)] + [zero] * n + m23[j])
    for k in range(n):
        rows.append(
            [-m13[i][k] for i in range(n)]
            + [m23[j][k] for j in range(n)]
            + [zero] * n
        )
    return Matrix(rows)


def maslov(
    l1: Lagrangian, l2: Lagrangian, l3: Lagrangian, order: OrderSpec | None = None
) -> int:
    """Signature of the Maslov quadratic form on l1 x l2 x l3; in [-n, n]."""
    pos, neg, _ = signature(maslov_gram(l1, l2, l3), order)
    return pos - neg


def maslov_with_radical(
    l1: Lagrangian, l2: Lagrangian, l3: Lagrangian, order: OrderSpec | None = None
) -> tuple[int, int]:
    """(signature, radical dimension) for degenerate configurations."""
    pos, neg, zero = signature(maslov_gram(l1, l2, l3), order)
    return pos - neg, zero


def is_maximal_triple(
    l1: Lagrangian, l2: Lagrangian, l3: Lagrangian, order: OrderSpec | None = None
) -> bool:
    return maslov(l1, l2, l3, order) == l1.n


def projection_matrix(onto: Lagrangian, parallel: Lagrangian) -> Matrix:
    """The 2n x 2n projection onto `onto` parallel to `parallel`."""
    if not onto.transverse(parallel):
        raise TransversalityError("projection needs transverse Lagrangians")
    n = onto.n
    combined = onto.basis.hstack(parallel.basis)
    inv = combined.inverse()
    one = combined.one()
    zero = combined.zero_entry()
    selector = Matrix(
        [[one if i == j and i < n else zero for j in range(2 * n)] for i in range(2 * n)]
    )
    return combined @ selector @ inv


def crossratio(l1: Lagrangian, l2: Lagrangian, l3: Lagrangian, l4: Lagrangian):
    """det of p_{l1}^{par l2} . p_{l3}^{par l4} restricted to l1.

    Needs l1 transverse l2 and l3 transverse l4.  The value is independent
    of the basis of l1 (a change of basis conjugates the restriction).
    """
    p12 = projection_matrix(l1, l2)
    p34 = projection_matrix(l3, l4)
    image = p12 @ p34 @ l1.basis
    coords = _coordinates_in(l1.basis, image)
    return coords.det()


def _coordinates_in(basis: Matrix, vectors: Matrix) -> Matrix:
    """Coordinates of `vectors` (columns, inside span(basis)) in `basis`."""
    _, pivots = basis.transpose().rref()
    square = basis.submatrix(pivots, range(basis.cols))
    rhs = vectors.submatrix(pivots, range(vectors.cols))
    return square.inverse() @ rhs
