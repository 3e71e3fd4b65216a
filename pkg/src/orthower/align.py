"""Extended Levenshtein alignment over token lists.

Differences from the textbook algorithm:

* variable costs — sentence punctuation is cheap to insert/delete (0.5),
  case-only substitutions and punctuation-to-punctuation substitutions cost
  0.5, and substituting across the word/punctuation divide costs 2, which
  makes delete-plus-insert (1.5) the preferred resolution;
* compound detection — a slice of reference tokens matches a slice of
  hypothesis tokens at zero cost when their concatenated values are equal
  after removing spaces and hyphens (case-sensitive, never across
  punctuation, slice lengths capped by the compound limit).

Costs are tracked internally in half units (integers) so DP ties are exact;
the public surface reports them as floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .tokens import Token

# Classes a substitution may be assigned later (kept here out of the way of
# an import cycle; classify and metrics both need it).
INF = float("inf")


class OperationKind(Enum):
    OK = "ok"
    INSERTION = "insertion"
    DELETION = "deletion"
    SUBSTITUTION = "substitution"
    COMPOUND_HYP = "compound_hyp"
    COMPOUND_REF = "compound_ref"
    COMPOUND_END = "compound_end"


@dataclass(frozen=True)
class CostModel:
    """Edit costs in token-count units; all must be multiples of 0.5.

    ``compound_limit`` caps how many tokens one side of a compound match may
    span; None means unbounded. 0 disables compound detection entirely.
    """

    indel_punct: float = 0.5
    indel_other: float = 1.0
    sub_cross_type: float = 2.0
    sub_punct_punct: float = 0.5
    sub_case_only: float = 0.5
    sub_other: float = 1.0
    compound_limit: int | None = None

    def __post_init__(self):
        for name in (
            "indel_punct",
            "indel_other",
            "sub_cross_type",
            "sub_punct_punct",
            "sub_case_only",
            "sub_other",
        ):
            value = getattr(self, name)
            if value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")
            if round(value * 2) != value * 2:
                raise ValueError(f"{name} must be a multiple of 0.5, got {value}")
        if self.sub_cross_type < self.indel_punct + self.indel_other:
            raise ValueError(
                "sub_cross_type must be at least indel_punct + indel_other, "
                "otherwise cross-type substitutions beat delete-plus-insert"
            )
        if self.compound_limit is not None and self.compound_limit < 0:
            raise ValueError("compound_limit must be non-negative or None")

    def _half(self, value: float) -> int:
        return int(round(value * 2))


@dataclass
class RouteElement:
    """One step of the alignment route."""

    op: OperationKind
    ref: Token | None = None
    hyp: Token | None = None
    cost: float = 0.0
    error_class: "object | None" = None  # filled in by classify

    def __post_init__(self):
        if self.op is OperationKind.DELETION and (self.ref is None or self.hyp is not None):
            raise ValueError("deletion carries a reference token only")
        if self.op is OperationKind.INSERTION and (self.hyp is None or self.ref is not None):
            raise ValueError("insertion carries a hypothesis token only")


@dataclass
class Alignment:
    route: list[RouteElement]
    total_cost: float
    matrix_dims: tuple[int, int]


def cost_indel(token: Token, model: CostModel = CostModel()) -> float:
    """Insertion/deletion cost of one token."""
    return model.indel_punct if token.is_punctuation else model.indel_other


def cost_sub(a: Token, b: Token, model: CostModel = CostModel()) -> float:
    """Substitution cost of a reference/hypothesis token pair."""
    if a.is_punctuation != b.is_punctuation:
        return model.sub_cross_type
    if a.is_punctuation and b.is_punctuation:
        return model.sub_punct_punct
    if a.value.lower() == b.value.lower():
        return model.sub_case_only
    return model.sub_other


def compound_key(value: str) -> str:
    """Comparison form for compound matching: spaces and hyphens removed."""
    return value.replace("-", "").replace(" ", "")


# backtrace op codes (stored in a byte matrix)
_OK, _SUB, _DEL, _INS, _COMPOUND = 0, 1, 2, 3, 4


def _compound_candidates(keys_a, keys_b, punct_a, punct_b, i, j, max_x, max_y):
    """All (x, y) slice lengths whose key concatenations match ending at (i, j).

    Grows the shorter concatenation one token at a time and stops as soon as
    one string is no longer a suffix of the other, a punctuation token is
    hit, or the limit is exceeded; on natural text this terminates almost
    immediately, which keeps an unbounded limit affordable. The caller has
    already checked the (1, 1) pair for punctuation and empty keys.
    """
    sa = keys_a[i - 1]
    sb = keys_b[j - 1]
    x, y = 1, 1
    found = []
    while True:
        if sa == sb:
            found.append((x, y))
            # a longer match needs both sides to grow; extend the reference
            if x < max_x and not punct_a[i - 1 - x]:
                nxt = keys_a[i - 1 - x]
                if not nxt:
                    break
                sa = nxt + sa
                x += 1
                continue
            break
        if len(sa) < len(sb):
            if not sb.endswith(sa):
                break
            if x >= max_x or punct_a[i - 1 - x]:
                break
            nxt = keys_a[i - 1 - x]
            if not nxt:
                break
            sa = nxt + sa
            x += 1
        else:
            if not sa.endswith(sb):
                break
            if y >= max_y or punct_b[j - 1 - y]:
                break
            nxt = keys_b[j - 1 - y]
            if not nxt:
                break
            sb = nxt + sb
            y += 1
    return found


def align(ref: list[Token], hyp: list[Token], model: CostModel | None = None) -> Alignment:
    """Minimum-cost alignment of two token lists under the cost model.

    Ties are broken deterministically: match/compound beats substitution
    beats deletion beats insertion.
    """
    model = model or CostModel()
    half = model._half
    h_indel_p = half(model.indel_punct)
    h_indel_o = half(model.indel_other)
    h_cross = half(model.sub_cross_type)
    h_pp = half(model.sub_punct_punct)
    h_case = half(model.sub_case_only)
    h_other = half(model.sub_other)
    n, m = len(ref), len(hyp)

    values_a = [t.value for t in ref]
    values_b = [t.value for t in hyp]
    lower_a = [v.lower() for v in values_a]
    lower_b = [v.lower() for v in values_b]
    punct_a = [t.is_punctuation for t in ref]
    punct_b = [t.is_punctuation for t in hyp]
    keys_a = [compound_key(v) for v in values_a]
    keys_b = [compound_key(v) for v in values_b]
    last_a = [k[-1] if k else "" for k in keys_a]
    last_b = [k[-1] if k else "" for k in keys_b]
    indel_a = [h_indel_p if p else h_indel_o for p in punct_a]
    indel_b = [h_indel_p if p else h_indel_o for p in punct_b]

    big = 1 << 60
    limit = model.compound_limit
    compounds_on = limit is None or limit >= 1

    cost: list[list[int]] = [[0] * (m + 1)]
    ops = [bytearray(m + 1) for _ in range(n + 1)]
    compounds: dict[tuple[int, int], tuple[int, int]] = {}

    row0 = cost[0]
    for j in range(1, m + 1):
        row0[j] = row0[j - 1] + indel_b[j - 1]
        ops[0][j] = _INS
    for i in range(1, n + 1):
        va = values_a[i - 1]
        la = lower_a[i - 1]
        pa = punct_a[i - 1]
        ia = indel_a[i - 1]
        ca = last_a[i - 1]
        compound_here = compounds_on and not pa and ca
        max_x = i if limit is None else min(i, limit)
        prev_row = cost[i - 1]
        row = [0] * (m + 1)
        row[0] = prev_row[0] + ia
        ops_row = ops[i]
        ops_row[0] = _DEL
        for j in range(1, m + 1):
            jj = j - 1
            diag = prev_row[jj]
            if va == values_b[jj]:
                best = diag
                best_op = _OK
            else:
                best = big
                best_op = _DEL
            if compound_here and ca == last_b[jj] and not punct_b[jj]:
                max_y = j if limit is None else min(j, limit)
                for x, y in _compound_candidates(
                    keys_a, keys_b, punct_a, punct_b, i, j, max_x, max_y
                ):
                    if x == 1 and y == 1 and va == values_b[jj]:
                        continue  # plain equality stays the Ok branch
                    cand = cost[i - x][j - y]
                    if cand < best:
                        best = cand
                        best_op = _COMPOUND
                        compounds[(i, j)] = (x, y)
            if pa != punct_b[jj]:
                sub = h_cross
            elif pa:
                sub = h_pp
            elif la == lower_b[jj]:
                sub = h_case
            else:
                sub = h_other
            cand = diag + sub
            if cand < best:
                best = cand
                best_op = _SUB
            cand = prev_row[j] + ia
            if cand < best:
                best = cand
                best_op = _DEL
            cand = row[jj] + indel_b[jj]
            if cand < best:
                best = cand
                best_op = _INS
            row[j] = best
            ops_row[j] = best_op
        cost.append(row)

    route: list[RouteElement] = []
    i, j = n, m
    while i > 0 or j > 0:
        code = ops[i][j]
        if code == _OK:
            route.append(RouteElement(OperationKind.OK, ref=ref[i - 1], hyp=hyp[j - 1]))
            i -= 1
            j -= 1
        elif code == _SUB:
            step = (cost[i][j] - cost[i - 1][j - 1]) / 2
            route.append(
                RouteElement(OperationKind.SUBSTITUTION, ref=ref[i - 1], hyp=hyp[j - 1], cost=step)
            )
            i -= 1
            j -= 1
        elif code == _DEL:
            route.append(RouteElement(OperationKind.DELETION, ref=ref[i - 1], cost=indel_a[i - 1] / 2))
            i -= 1
        elif code == _INS:
            route.append(RouteElement(OperationKind.INSERTION, hyp=hyp[j - 1], cost=indel_b[j - 1] / 2))
            j -= 1
        else:  # compound run: emitted back to front, reversed below
            x, y = compounds[(i, j)]
            route.append(
                RouteElement(OperationKind.COMPOUND_END, ref=ref[i - 1], hyp=hyp[j - 1])
            )
            for back in range(1, y):
                route.append(RouteElement(OperationKind.COMPOUND_HYP, hyp=hyp[j - 1 - back]))
            for back in range(1, x):
                route.append(RouteElement(OperationKind.COMPOUND_REF, ref=ref[i - 1 - back]))
            i -= x
            j -= y
    route.reverse()
    return Alignment(route=route, total_cost=cost[n][m] / 2, matrix_dims=(n + 1, m + 1))
