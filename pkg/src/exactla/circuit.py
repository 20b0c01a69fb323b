"""Arithmetic circuits with division and the Num/Den elimination transform.

Gates are hash-consed: building the same expression twice yields the same
gate object, so the Num/Den recursion shares subcircuits instead of copying
them (without sharing the transform blows up exponentially on alternating
sums of quotients).

Evaluation semantics follow the transform, not operational division: a
circuit has a value under an assignment whenever its top-level denominator
circuit evaluates to a nonzero field element, even if naive gate-by-gate
evaluation would divide by zero somewhere inside.
"""

from .errors import InvalidInput, MalformedInput, ZeroDenominator

CONST, VAR, ADD, MUL, DIV = "const", "var", "add", "mul", "div"

_INTERN = {}


class Gate:
    """One interned circuit node; the output gate stands for its whole DAG."""

    __slots__ = ("kind", "payload", "args")

    def __init__(self, kind, payload, args):
        self.kind = kind
        self.payload = payload
        self.args = args

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __truediv__(self, other):
        return div(self, other)

    def __repr__(self):
        return f"Gate<{format_sexpr(self)}>"


def _intern(kind, payload, args):
    key = (kind, payload, tuple(id(a) for a in args))
    g = _INTERN.get(key)
    if g is None:
        g = Gate(kind, payload, args)
        _INTERN[key] = g
    return g


def const(c):
    return _intern(CONST, int(c), ())


def var(name):
    if not name or any(ch.isspace() or ch in "()" for ch in name):
        raise InvalidInput(f"bad variable name {name!r}")
    return _intern(VAR, name, ())


def add(f, g):
    return _intern(ADD, None, (f, g))


def mul(f, g):
    return _intern(MUL, None, (f, g))


def div(f, g):
    return _intern(DIV, None, (f, g))


def _postorder(root):
    """Gates of the DAG, children before parents, each exactly once."""
    out, seen, stack = [], set(), [(root, False)]
    while stack:
        g, expanded = stack.pop()
        if id(g) in seen:
            continue
        if expanded:
            seen.add(id(g))
            out.append(g)
        else:
            stack.append((g, True))
            for a in g.args:
                if id(a) not in seen:
                    stack.append((a, False))
    return out


def gate_count(root):
    return len(_postorder(root))


def variables(root):
    return sorted({g.payload for g in _postorder(root) if g.kind == VAR})


def is_division_free(root):
    return all(g.kind != DIV for g in _postorder(root))


def num_den(root):
    """Division elimination: a pair (Num, Den) of division-free circuits with
    Num/Den equal to the input wherever the input is defined.

    const c -> (c, 1); var x -> (x, 1);
    F+G -> (N_F D_G + N_G D_F, D_F D_G); F*G -> (N_F N_G, D_F D_G);
    F/G -> (N_F D_G, D_F N_G).
    Hash-consing keeps shared subcircuits shared in the outputs.
    """
    one = const(1)
    pairs = {}
    for g in _postorder(root):
        if g.kind in (CONST, VAR):
            pairs[id(g)] = (g, one)
        else:
            nf, df = pairs[id(g.args[0])]
            ng, dg = pairs[id(g.args[1])]
            if g.kind == ADD:
                pairs[id(g)] = (add(mul(nf, dg), mul(ng, df)), mul(df, dg))
            elif g.kind == MUL:
                pairs[id(g)] = (mul(nf, ng), mul(df, dg))
            else:
                pairs[id(g)] = (mul(nf, dg), mul(df, ng))
    return pairs[id(root)]


def eval_alg(root, field, assignment):
    """Plain evaluation of a division-free circuit."""
    values = {}
    for g in _postorder(root):
        if g.kind == CONST:
            values[id(g)] = field.from_int(g.payload)
        elif g.kind == VAR:
            if g.payload not in assignment:
                raise InvalidInput(f"unassigned variable {g.payload!r}")
            values[id(g)] = assignment[g.payload]
        elif g.kind == ADD:
            values[id(g)] = field.add(values[id(g.args[0])], values[id(g.args[1])])
        elif g.kind == MUL:
            values[id(g)] = field.mul(values[id(g.args[0])], values[id(g.args[1])])
        else:
            raise InvalidInput("eval_alg applied to a circuit with division")
    return values[id(root)]


def evaluate(root, field, assignment):
    """Num/Den evaluation: defined iff the top-level denominator is nonzero."""
    num, den = num_den(root)
    dv = eval_alg(den, field, assignment)
    if field.is_zero(dv):
        raise ZeroDenominator("denominator circuit evaluates to zero")
    return field.div(eval_alg(num, field, assignment), dv)


def eval_direct(root, field, assignment):
    """Naive gate-by-gate evaluation, dividing as it goes (test reference)."""
    values = {}
    for g in _postorder(root):
        if g.kind == CONST:
            values[id(g)] = field.from_int(g.payload)
        elif g.kind == VAR:
            values[id(g)] = assignment[g.payload]
        else:
            a, b = values[id(g.args[0])], values[id(g.args[1])]
            if g.kind == ADD:
                values[id(g)] = field.add(a, b)
            elif g.kind == MUL:
                values[id(g)] = field.mul(a, b)
            else:
                if field.is_zero(b):
                    raise ZeroDenominator("division by zero during naive evaluation")
                values[id(g)] = field.div(a, b)
    return values[id(root)]


# ---------------------------------------------------------------------------
# s-expression text form: (add (div (var x) (var y)) (const 1))

def format_sexpr(root):
    if root.kind == CONST:
        return f"(const {root.payload})"
    if root.kind == VAR:
        return f"(var {root.payload})"
    a, b = root.args
    return f"({root.kind} {format_sexpr(a)} {format_sexpr(b)})"


def _tokenize(text):
    return text.replace("(", " ( ").replace(")", " ) ").split()


def parse_sexpr(text):
    tokens = _tokenize(text)
    if not tokens:
        raise MalformedInput("empty circuit expression")
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(tokens):
            raise MalformedInput("unexpected end of circuit expression")
        if tokens[pos] != "(":
            raise MalformedInput(f"expected '(' but found {tokens[pos]!r}")
        pos += 1
        if pos >= len(tokens):
            raise MalformedInput("unexpected end after '('")
        head = tokens[pos]
        pos += 1
        if head == CONST:
            if pos >= len(tokens):
                raise MalformedInput("missing constant value")
            try:
                value = int(tokens[pos])
            except ValueError:
                raise MalformedInput(f"bad integer constant {tokens[pos]!r}") from None
            pos += 1
            node = const(value)
        elif head == VAR:
            if pos >= len(tokens):
                raise MalformedInput("missing variable name")
            node = var(tokens[pos])
            pos += 1
        elif head in (ADD, MUL, DIV):
            left = parse()
            right = parse()
            node = _intern(head, None, (left, right))
        else:
            raise MalformedInput(f"unknown gate kind {head!r}")
        if pos >= len(tokens) or tokens[pos] != ")":
            raise MalformedInput(f"missing ')' in {head} form")
        pos += 1
        return node

    root = parse()
    if pos != len(tokens):
        raise MalformedInput(f"trailing input after circuit: {tokens[pos]!r}")
    return root
