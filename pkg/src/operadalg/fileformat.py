"""The structure-constants text format shared by the library and the CLI.

Line oriented, whitespace-separated tokens, '#' starts a comment.  Basis
indices are 0-based; scalars are "p/q" (or plain integers) over Q and
integers over GF(p).  Zero entries are omitted and omitted tensors default
to zero maps, so serialization is sparse and deterministic: rebuilding an
object and serializing it again yields identical bytes.

Operad files:

    kind operad
    field Q                     # or Fp:<prime>
    max_arity 7
    dim 1 1                     # arity, dimension (one line per arity 1..N)
    action 3 1 -1               # arity n, generator k, d*d entries row-major
    identity 1                  # dim P(1) entries
    comp 3 3 1 0 0 0 1          # m n i a b c scalar

Algebra files:

    kind algebra
    field Q
    max_degree 6
    dim 0 1                     # degree, dimension (one line per degree 0..D)
    unit 1                      # dim A_0 entries
    mult 1 1 0 0 0 1            # i j a b c scalar
    typing 1 e o                # degree, then e/o per basis vector (optional)
"""

from .algebra import GradedAlgebra
from .errors import FormatError
from .fields import field_from_name
from .operad import TruncatedOperad


def _tokenize(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def load(text):
    """Parse a structure-constants document into an operad or an algebra."""
    rows = list(_tokenize(text))
    if not rows:
        raise FormatError("empty document")
    lineno, head = rows[0]
    if head[0] != "kind" or len(head) != 2 or head[1] not in ("operad", "algebra"):
        raise FormatError("first line must be 'kind operad' or 'kind algebra'", lineno)
    if head[1] == "operad":
        return _load_operad(rows[1:])
    return _load_algebra(rows[1:])


def _header(rows, size_key):
    field = None
    size = None
    body_start = 0
    for idx, (lineno, toks) in enumerate(rows):
        if toks[0] == "field":
            if len(toks) != 2:
                raise FormatError("field line needs one token", lineno)
            field = field_from_name(toks[1])
        elif toks[0] == size_key:
            if len(toks) != 2:
                raise FormatError("%s line needs one integer" % size_key, lineno)
            size = _int(toks[1], lineno)
        else:
            body_start = idx
            break
        body_start = idx + 1
    if field is None:
        raise FormatError("missing 'field' header")
    if size is None:
        raise FormatError("missing '%s' header" % size_key)
    return field, size, rows[body_start:]


def _int(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise FormatError("expected an integer, got %r" % tok, lineno)


def _scalar(field, tok, lineno):
    try:
        return field.parse(tok)
    except FormatError as exc:
        raise FormatError(str(exc), lineno)


def _load_operad(rows):
    field, N, body = _header(rows, "max_arity")
    dims = [0] * (N + 1)
    seen_dims = set()
    actions = {}
    identity = None
    entries = []
    for lineno, toks in body:
        key = toks[0]
        if key == "dim":
            if len(toks) != 3:
                raise FormatError("dim line needs arity and dimension", lineno)
            n, d = _int(toks[1], lineno), _int(toks[2], lineno)
            if not 1 <= n <= N:
                raise FormatError("arity %d outside 1..%d" % (n, N), lineno)
            if n in seen_dims:
                raise FormatError("duplicate dim line for arity %d" % n, lineno)
            dims[n] = d
            seen_dims.add(n)
        elif key == "action":
            if len(toks) < 3:
                raise FormatError("action line needs arity and generator", lineno)
            n, k = _int(toks[1], lineno), _int(toks[2], lineno)
            if not (2 <= n <= N and 1 <= k <= n - 1):
                raise FormatError("action key (%d, %d) out of range" % (n, k), lineno)
            if n not in seen_dims:
                raise FormatError("action for arity %d before its dim line" % n, lineno)
            d = dims[n]
            if len(toks) != 3 + d * d:
                raise FormatError("action %d %d needs %d entries" % (n, k, d * d), lineno)
            if (n, k) in actions:
                raise FormatError("duplicate action line for (%d, %d)" % (n, k), lineno)
            vals = [_scalar(field, t, lineno) for t in toks[3:]]
            actions[(n, k)] = [vals[r * d:(r + 1) * d] for r in range(d)]
        elif key == "identity":
            identity = [_scalar(field, t, lineno) for t in toks[1:]]
        elif key == "comp":
            if len(toks) != 8:
                raise FormatError("comp line needs m n i a b c scalar", lineno)
            m, n, i, a, b, c = (_int(t, lineno) for t in toks[1:7])
            entries.append((m, n, i, a, b, c, _scalar(field, toks[7], lineno), lineno))
        else:
            raise FormatError("unknown directive %r in operad file" % key, lineno)
    missing = [n for n in range(1, N + 1) if n not in seen_dims]
    if missing:
        raise FormatError("missing dim lines for arities %r" % missing)
    if identity is None:
        raise FormatError("missing identity vector")
    comps = {}
    for m, n, i, a, b, c, s, lineno in entries:
        if not (1 <= m <= N and 1 <= n <= N and m + n - 1 <= N and 1 <= i <= m):
            raise FormatError("comp key (%d,%d,%d) out of range" % (m, n, i), lineno)
        if not (0 <= a < dims[m] and 0 <= b < dims[n] and 0 <= c < dims[m + n - 1]):
            raise FormatError("comp indices out of range for (%d,%d,%d)" % (m, n, i), lineno)
        T = comps.setdefault((m, n, i), [[[None] * dims[m + n - 1]
                                          for _ in range(dims[n])]
                                         for _ in range(dims[m])])
        if T[a][b][c] is not None:
            raise FormatError("duplicate comp entry (%d %d %d %d %d %d)"
                              % (m, n, i, a, b, c), lineno)
        T[a][b][c] = s
    for T in comps.values():
        for row in T:
            for vec in row:
                for c in range(len(vec)):
                    if vec[c] is None:
                        vec[c] = field.zero
    try:
        return TruncatedOperad(field, N, dims, actions, identity, comps)
    except ValueError as exc:
        raise FormatError(str(exc))


def _load_algebra(rows):
    field, D, body = _header(rows, "max_degree")
    dims = [0] * (D + 1)
    seen_dims = set()
    unit = None
    entries = []
    typing = {}
    for lineno, toks in body:
        key = toks[0]
        if key == "dim":
            if len(toks) != 3:
                raise FormatError("dim line needs degree and dimension", lineno)
            d, v = _int(toks[1], lineno), _int(toks[2], lineno)
            if not 0 <= d <= D:
                raise FormatError("degree %d outside 0..%d" % (d, D), lineno)
            if d in seen_dims:
                raise FormatError("duplicate dim line for degree %d" % d, lineno)
            dims[d] = v
            seen_dims.add(d)
        elif key == "unit":
            unit = [_scalar(field, t, lineno) for t in toks[1:]]
        elif key == "mult":
            if len(toks) != 7:
                raise FormatError("mult line needs i j a b c scalar", lineno)
            i, j, a, b, c = (_int(t, lineno) for t in toks[1:6])
            entries.append((i, j, a, b, c, _scalar(field, toks[6], lineno), lineno))
        elif key == "typing":
            if len(toks) < 2:
                raise FormatError("typing line needs a degree", lineno)
            d = _int(toks[1], lineno)
            flags = toks[2:]
            if any(f not in ("e", "o") for f in flags):
                raise FormatError("typing flags must be 'e' or 'o'", lineno)
            if d in typing:
                raise FormatError("duplicate typing line for degree %d" % d, lineno)
            typing[d] = tuple(flags)
        else:
            raise FormatError("unknown directive %r in algebra file" % key, lineno)
    missing = [d for d in range(0, D + 1) if d not in seen_dims]
    if missing:
        raise FormatError("missing dim lines for degrees %r" % missing)
    if unit is None:
        raise FormatError("missing unit vector")
    mult = {}
    for i, j, a, b, c, s, lineno in entries:
        if not (0 <= i <= D and 0 <= j <= D and i + j <= D):
            raise FormatError("mult key (%d,%d) out of range" % (i, j), lineno)
        if not (0 <= a < dims[i] and 0 <= b < dims[j] and 0 <= c < dims[i + j]):
            raise FormatError("mult indices out of range for (%d,%d)" % (i, j), lineno)
        T = mult.setdefault((i, j), [[[None] * dims[i + j]
                                      for _ in range(dims[j])]
                                     for _ in range(dims[i])])
        if T[a][b][c] is not None:
            raise FormatError("duplicate mult entry (%d %d %d %d %d)"
                              % (i, j, a, b, c), lineno)
        T[a][b][c] = s
    for T in mult.values():
        for row in T:
            for vec in row:
                for c in range(len(vec)):
                    if vec[c] is None:
                        vec[c] = field.zero
    try:
        return GradedAlgebra(field, D, dims, unit, mult,
                             typing=typing if typing else None)
    except ValueError as exc:
        raise FormatError(str(exc))


def dump(obj):
    """Serialize an operad or algebra; deterministic, sparse, and re-loadable."""
    if isinstance(obj, TruncatedOperad):
        return _dump_operad(obj)
    if isinstance(obj, GradedAlgebra):
        return _dump_algebra(obj)
    raise TypeError("can only dump a TruncatedOperad or a GradedAlgebra")


def _dump_operad(P):
    f = P.field
    out = ["kind operad", "field %r" % f, "max_arity %d" % P.max_arity]
    for n in range(1, P.max_arity + 1):
        out.append("dim %d %d" % (n, P.dims[n]))
    for (n, k) in sorted(P.actions):
        flat = " ".join(f.fmt(x) for row in P.actions[(n, k)] for x in row)
        out.append("action %d %d %s" % (n, k, flat))
    out.append("identity %s" % " ".join(f.fmt(x) for x in P.identity))
    for (m, n, i) in sorted(P.comps):
        T = P.comps[(m, n, i)]
        for a, row in enumerate(T):
            for b, vec in enumerate(row):
                for c, s in enumerate(vec):
                    if bool(s):
                        out.append("comp %d %d %d %d %d %d %s"
                                   % (m, n, i, a, b, c, f.fmt(s)))
    return "\n".join(out) + "\n"


def _dump_algebra(A):
    f = A.field
    out = ["kind algebra", "field %r" % f, "max_degree %d" % A.max_degree]
    for d in range(A.max_degree + 1):
        out.append("dim %d %d" % (d, A.dims[d]))
    out.append("unit %s" % " ".join(f.fmt(x) for x in A.unit))
    for (i, j) in sorted(A.mult):
        T = A.mult[(i, j)]
        for a, row in enumerate(T):
            for b, vec in enumerate(row):
                for c, s in enumerate(vec):
                    if bool(s):
                        out.append("mult %d %d %d %d %d %s"
                                   % (i, j, a, b, c, f.fmt(s)))
    if A.typed:
        for d in sorted(A.typing):
            out.append("typing %d %s" % (d, " ".join(A.typing[d])))
    return "\n".join(out) + "\n"
