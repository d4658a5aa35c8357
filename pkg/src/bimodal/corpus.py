"""Bundled Hilbert-style derivations.

Every entry pairs a stable name with a fully primitive proof object: each
line is an axiom instance, a tautology instance, or the result of MP or a
congruence rule applied to earlier lines.  Arguments that would cite several
axioms in one step are elaborated into explicit Taut/MP glue; the
intermediate tautologies are fixture choices and are commented where they
are not obvious.

The corpus serves three purposes: it exercises ``check_proof`` end to end,
its conclusions feed the bounded soundness harness (every conclusion must
be valid on the proving system's frame class), and its entries are the
mutation targets for the negative robustness suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from bimodal.proof import MP, Axiom, Proof, ProofLine, R1, R2, R3, R4, Taut
from bimodal.syntax import parse


@dataclass(frozen=True, slots=True)
class CorpusEntry:
    """A named proof plus a one-line account of what it establishes."""

    name: str
    system: str
    note: str
    proof: Proof

    @property
    def conclusion(self):
        return self.proof.conclusion


def _proof(system: str, *steps: tuple[str, object]) -> Proof:
    lines = tuple(ProofLine(parse(text), just) for text, just in steps)
    return Proof(system=system, premises=(), lines=lines)


def _nest(*formulas: str) -> str:
    """Right-nested implication chain ``(f1) -> ((f2) -> (... fk))``."""

    out = formulas[-1]
    for f in reversed(formulas[:-1]):
        out = f"({f}) -> ({out})"
    return out


# --------------------------------------------------------------------------
# accident/contingency interplay: the workhorse lemma O φ & φ -> D φ
# --------------------------------------------------------------------------


def _fact_circ_to_delta() -> Proof:
    # If p holds essentially and actually, no successor refutes it, so p
    # cannot be contingent.  A6 splits C p into the two accident cases; A1
    # kills the A ~p case because p is true.
    l1 = "C p -> A p | A ~p"
    l2 = "A ~p -> ~p"
    l5 = "O p & p -> D p"
    return _proof(
        "K",
        (l1, Axiom("A6")),
        (l2, Axiom("A1")),
        (_nest(l1, l2, l5), Taut()),
        (_nest(l2, l5), MP(1, 3)),
        (l5, MP(2, 4)),
    )


def _noncon_conjunction_2() -> Proof:
    l1 = "C(p & q) -> C p | C q"
    l3 = "D p & D q -> D(p & q)"
    return _proof(
        "K",
        (l1, Axiom("A4")),
        (_nest(l1, l3), Taut()),
        (l3, MP(1, 2)),
    )


def _noncon_conjunction_3() -> Proof:
    l1 = "C(p & q & r) -> C(p & q) | C r"
    l2 = "C(p & q) -> C p | C q"
    l5 = "D p & D q & D r -> D(p & q & r)"
    return _proof(
        "K",
        (l1, Axiom("A4")),
        (l2, Axiom("A4")),
        (_nest(l1, l2, l5), Taut()),
        (_nest(l2, l5), MP(1, 3)),
        (l5, MP(2, 4)),
    )


def _ess_conjunction_2() -> Proof:
    l1 = "A(p & q) -> A p | A q"
    l3 = "O p & O q -> O(p & q)"
    return _proof(
        "K",
        (l1, Axiom("A5")),
        (_nest(l1, l3), Taut()),
        (l3, MP(1, 2)),
    )


def _ess_conjunction_3() -> Proof:
    l1 = "A(p & q & r) -> A(p & q) | A r"
    l2 = "A(p & q) -> A p | A q"
    l5 = "O p & O q & O r -> O(p & q & r)"
    return _proof(
        "K",
        (l1, Axiom("A5")),
        (l2, Axiom("A5")),
        (_nest(l1, l2, l5), Taut()),
        (_nest(l2, l5), MP(1, 3)),
        (l5, MP(2, 4)),
    )


# --------------------------------------------------------------------------
# guarded transfer: D(q -> p) & D q & O(p -> q) -> p | D p, and the
# two-guard variant.
# --------------------------------------------------------------------------


def _guarded_noncon_transfer_1() -> Proof:
    # Stage 1 (lines 1-7): from O(p -> q) and ~p conclude D(p -> q); this
    # is the workhorse lemma applied to p -> q, weakened through the
    # tautology ~p -> (p -> q).
    l1 = "C(p -> q) -> A(p -> q) | A ~(p -> q)"
    l2 = "A ~(p -> q) -> ~(p -> q)"
    l5 = "O(p -> q) & (p -> q) -> D(p -> q)"
    l7 = "O(p -> q) & ~p -> D(p -> q)"
    # Stage 2 (lines 8-13): D(q -> p) & D q -> D(q & p), by the conjunction
    # direction of A4 plus the rewrite (q -> p) & q <-> q & p.
    l8 = "C((q -> p) & q) -> C(q -> p) | C q"
    l9 = "(q -> p) & q <-> q & p"
    l10 = "D((q -> p) & q) <-> D(q & p)"
    l13 = "D(q -> p) & D q -> D(q & p)"
    # Stage 3 (lines 14-23): D(p -> q) & D(q & p) -> D p.  The fixture
    # tautology is ~p <-> (p -> q) & ~(q & p); A2 moves the negations.
    l14 = "C((p -> q) & ~(q & p)) -> C(p -> q) | C ~(q & p)"
    l15 = "(p -> q) & ~(q & p) <-> ~p"
    l16 = "D((p -> q) & ~(q & p)) <-> D ~p"
    l17 = "C p <-> C ~p"
    l18 = "C(q & p) <-> C ~(q & p)"
    l23 = "D(p -> q) & D(q & p) -> D p"
    l27 = "D(q -> p) & D q & O(p -> q) -> p | D p"
    return _proof(
        "K",
        (l1, Axiom("A6")),
        (l2, Axiom("A1")),
        (_nest(l1, l2, l5), Taut()),
        (_nest(l2, l5), MP(1, 3)),
        (l5, MP(2, 4)),
        (_nest(l5, l7), Taut()),
        (l7, MP(5, 6)),
        (l8, Axiom("A4")),
        (l9, Taut()),
        (l10, R3(9)),
        (_nest(l8, l10, l13), Taut()),
        (_nest(l10, l13), MP(8, 11)),
        (l13, MP(10, 12)),
        (l14, Axiom("A4")),
        (l15, Taut()),
        (l16, R3(15)),
        (l17, Axiom("A2")),
        (l18, Axiom("A2")),
        (_nest(l14, l16, l17, l18, l23), Taut()),
        (_nest(l16, l17, l18, l23), MP(14, 19)),
        (_nest(l17, l18, l23), MP(16, 20)),
        (_nest(l18, l23), MP(17, 21)),
        (l23, MP(18, 22)),
        (_nest(l7, l13, l23, l27), Taut()),
        (_nest(l13, l23, l27), MP(7, 24)),
        (_nest(l23, l27), MP(13, 25)),
        (l27, MP(23, 26)),
    )


def _guarded_noncon_transfer_2() -> Proof:
    # Same shape as the one-guard proof, with the guard conjunction q & r
    # assembled first: D q & D r merge via A4, O(p -> q) & O(p -> r) merge
    # via A5 + R4.
    l3 = "D q & D r -> D(q & r)"
    l1 = "C(q & r) -> C q | C r"
    l4 = "A((p -> q) & (p -> r)) -> A(p -> q) | A(p -> r)"
    l5 = "(p -> q) & (p -> r) <-> (p -> q & r)"
    l6 = "O((p -> q) & (p -> r)) <-> O(p -> q & r)"
    l9 = "O(p -> q) & O(p -> r) -> O(p -> q & r)"
    l10 = "C(p -> q & r) -> A(p -> q & r) | A ~(p -> q & r)"
    l11 = "A ~(p -> q & r) -> ~(p -> q & r)"
    l14 = "O(p -> q & r) & (p -> q & r) -> D(p -> q & r)"
    l16 = "O(p -> q & r) & ~p -> D(p -> q & r)"
    l17 = "C((q & r -> p) & (q & r)) -> C(q & r -> p) | C(q & r)"
    l18 = "(q & r -> p) & (q & r) <-> (q & r) & p"
    l19 = "D((q & r -> p) & (q & r)) <-> D((q & r) & p)"
    l22 = "D(q & r -> p) & D(q & r) -> D((q & r) & p)"
    l23 = (
        "C((p -> q & r) & ~((q & r) & p)) -> "
        "C(p -> q & r) | C ~((q & r) & p)"
    )
    l24 = "(p -> q & r) & ~((q & r) & p) <-> ~p"
    l25 = "D((p -> q & r) & ~((q & r) & p)) <-> D ~p"
    l26 = "C p <-> C ~p"
    l27 = "C((q & r) & p) <-> C ~((q & r) & p)"
    l32 = "D(p -> q & r) & D((q & r) & p) -> D p"
    l38 = "D(q & r -> p) & D q & D r & O(p -> q) & O(p -> r) -> p | D p"
    return _proof(
        "K",
        (l1, Axiom("A4")),
        (_nest(l1, l3), Taut()),
        (l3, MP(1, 2)),
        (l4, Axiom("A5")),
        (l5, Taut()),
        (l6, R4(5)),
        (_nest(l4, l6, l9), Taut()),
        (_nest(l6, l9), MP(4, 7)),
        (l9, MP(6, 8)),
        (l10, Axiom("A6")),
        (l11, Axiom("A1")),
        (_nest(l10, l11, l14), Taut()),
        (_nest(l11, l14), MP(10, 12)),
        (l14, MP(11, 13)),
        (_nest(l14, l16), Taut()),
        (l16, MP(14, 15)),
        (l17, Axiom("A4")),
        (l18, Taut()),
        (l19, R3(18)),
        (_nest(l17, l19, l22), Taut()),
        (_nest(l19, l22), MP(17, 20)),
        (l22, MP(19, 21)),
        (l23, Axiom("A4")),
        (l24, Taut()),
        (l25, R3(24)),
        (l26, Axiom("A2")),
        (l27, Axiom("A2")),
        (_nest(l23, l25, l26, l27, l32), Taut()),
        (_nest(l25, l26, l27, l32), MP(23, 28)),
        (_nest(l26, l27, l32), MP(25, 29)),
        (_nest(l27, l32), MP(26, 30)),
        (l32, MP(27, 31)),
        (_nest(l3, l9, l16, l22, l32, l38), Taut()),
        (_nest(l9, l16, l22, l32, l38), MP(3, 33)),
        (_nest(l16, l22, l32, l38), MP(9, 34)),
        (_nest(l22, l32, l38), MP(16, 35)),
        (_nest(l32, l38), MP(22, 36)),
        (l38, MP(32, 37)),
    )


# --------------------------------------------------------------------------
# cover transfer: a true p whose negation is essentially covered by the
# guards is non-contingent (and essential, in the O-version).
# --------------------------------------------------------------------------


def _noncon_from_cover_1() -> Proof:
    l1 = "C(~p -> q) -> A(~p -> q) | A ~(~p -> q)"
    l2 = "A ~(~p -> q) -> ~(~p -> q)"
    l5 = "O(~p -> q) & (~p -> q) -> D(~p -> q)"
    l7 = "O(~p -> q) & p -> D(~p -> q)"
    l8 = "(~p -> q) <-> (~q -> p)"
    l9 = "D(~p -> q) <-> D(~q -> p)"
    # Cover lemma: the two implications q -> p and ~q -> p jointly say p.
    l10 = "C((q -> p) & (~q -> p)) -> C(q -> p) | C(~q -> p)"
    l11 = "(q -> p) & (~q -> p) <-> p"
    l12 = "D((q -> p) & (~q -> p)) <-> D p"
    l15 = "D(q -> p) & D(~q -> p) -> D p"
    l19 = "D(q -> p) & O(~p -> q) & p -> D p"
    return _proof(
        "K",
        (l1, Axiom("A6")),
        (l2, Axiom("A1")),
        (_nest(l1, l2, l5), Taut()),
        (_nest(l2, l5), MP(1, 3)),
        (l5, MP(2, 4)),
        (_nest(l5, l7), Taut()),
        (l7, MP(5, 6)),
        (l8, Taut()),
        (l9, R3(8)),
        (l10, Axiom("A4")),
        (l11, Taut()),
        (l12, R3(11)),
        (_nest(l10, l12, l15), Taut()),
        (_nest(l12, l15), MP(10, 13)),
        (l15, MP(12, 14)),
        (_nest(l7, l9, l15, l19), Taut()),
        (_nest(l9, l15, l19), MP(7, 16)),
        (_nest(l15, l19), MP(9, 17)),
        (l19, MP(15, 18)),
    )


def _noncon_from_cover_2() -> Proof:
    l1 = "C(~p -> q) -> A(~p -> q) | A ~(~p -> q)"
    l2 = "A ~(~p -> q) -> ~(~p -> q)"
    l5 = "O(~p -> q) & (~p -> q) -> D(~p -> q)"
    l7 = "O(~p -> q) & p -> D(~p -> q)"
    l8 = "C(~p -> r) -> A(~p -> r) | A ~(~p -> r)"
    l9 = "A ~(~p -> r) -> ~(~p -> r)"
    l12 = "O(~p -> r) & (~p -> r) -> D(~p -> r)"
    l14 = "O(~p -> r) & p -> D(~p -> r)"
    l15 = "C((~p -> q) & (~p -> r)) -> C(~p -> q) | C(~p -> r)"
    l17 = "D(~p -> q) & D(~p -> r) -> D((~p -> q) & (~p -> r))"
    l18 = "(~p -> q) & (~p -> r) <-> (~(q & r) -> p)"
    l19 = "D((~p -> q) & (~p -> r)) <-> D(~(q & r) -> p)"
    l20 = (
        "C((q & r -> p) & (~(q & r) -> p)) -> "
        "C(q & r -> p) | C(~(q & r) -> p)"
    )
    l21 = "(q & r -> p) & (~(q & r) -> p) <-> p"
    l22 = "D((q & r -> p) & (~(q & r) -> p)) <-> D p"
    l25 = "D(q & r -> p) & D(~(q & r) -> p) -> D p"
    l31 = "D(q & r -> p) & O(~p -> q) & O(~p -> r) & p -> D p"
    return _proof(
        "K",
        (l1, Axiom("A6")),
        (l2, Axiom("A1")),
        (_nest(l1, l2, l5), Taut()),
        (_nest(l2, l5), MP(1, 3)),
        (l5, MP(2, 4)),
        (_nest(l5, l7), Taut()),
        (l7, MP(5, 6)),
        (l8, Axiom("A6")),
        (l9, Axiom("A1")),
        (_nest(l8, l9, l12), Taut()),
        (_nest(l9, l12), MP(8, 10)),
        (l12, MP(9, 11)),
        (_nest(l12, l14), Taut()),
        (l14, MP(12, 13)),
        (l15, Axiom("A4")),
        (_nest(l15, l17), Taut()),
        (l17, MP(15, 16)),
        (l18, Taut()),
        (l19, R3(18)),
        (l20, Axiom("A4")),
        (l21, Taut()),
        (l22, R3(21)),
        (_nest(l20, l22, l25), Taut()),
        (_nest(l22, l25), MP(20, 23)),
        (l25, MP(22, 24)),
        (_nest(l7, l14, l17, l19, l25, l31), Taut()),
        (_nest(l14, l17, l19, l25, l31), MP(7, 26)),
        (_nest(l17, l19, l25, l31), MP(14, 27)),
        (_nest(l19, l25, l31), MP(17, 28)),
        (_nest(l25, l31), MP(19, 29)),
        (l31, MP(25, 30)),
    )


def _ess_from_cover_1() -> Proof:
    l1 = "(~p -> q) <-> (~q -> p)"
    l2 = "O(~p -> q) <-> O(~q -> p)"
    l3 = "A((q -> p) & (~q -> p)) -> A(q -> p) | A(~q -> p)"
    l4 = "(q -> p) & (~q -> p) <-> p"
    l5 = "O((q -> p) & (~q -> p)) <-> O p"
    l8 = "O(q -> p) & O(~q -> p) -> O p"
    l11 = "O(q -> p) & O(~p -> q) -> O p"
    return _proof(
        "K",
        (l1, Taut()),
        (l2, R4(1)),
        (l3, Axiom("A5")),
        (l4, Taut()),
        (l5, R4(4)),
        (_nest(l3, l5, l8), Taut()),
        (_nest(l5, l8), MP(3, 6)),
        (l8, MP(5, 7)),
        (_nest(l2, l8, l11), Taut()),
        (_nest(l8, l11), MP(2, 9)),
        (l11, MP(8, 10)),
    )


def _ess_from_cover_2() -> Proof:
    l1 = "A((~p -> q) & (~p -> r)) -> A(~p -> q) | A(~p -> r)"
    l2 = "(~p -> q) & (~p -> r) <-> (~(q & r) -> p)"
    l3 = "O((~p -> q) & (~p -> r)) <-> O(~(q & r) -> p)"
    l6 = "O(~p -> q) & O(~p -> r) -> O(~(q & r) -> p)"
    l7 = (
        "A((q & r -> p) & (~(q & r) -> p)) -> "
        "A(q & r -> p) | A(~(q & r) -> p)"
    )
    l8 = "(q & r -> p) & (~(q & r) -> p) <-> p"
    l9 = "O((q & r -> p) & (~(q & r) -> p)) <-> O p"
    l12 = "O(q & r -> p) & O(~(q & r) -> p) -> O p"
    l15 = "O(q & r -> p) & O(~p -> q) & O(~p -> r) -> O p"
    return _proof(
        "K",
        (l1, Axiom("A5")),
        (l2, Taut()),
        (l3, R4(2)),
        (_nest(l1, l3, l6), Taut()),
        (_nest(l3, l6), MP(1, 4)),
        (l6, MP(3, 5)),
        (l7, Axiom("A5")),
        (l8, Taut()),
        (l9, R4(8)),
        (_nest(l7, l9, l12), Taut()),
        (_nest(l9, l12), MP(7, 10)),
        (l12, MP(9, 11)),
        (_nest(l6, l12, l15), Taut()),
        (_nest(l12, l15), MP(6, 13)),
        (l15, MP(12, 14)),
    )


# --------------------------------------------------------------------------
# small bridges and system-specific theorems
# --------------------------------------------------------------------------


def _ess_diluted() -> Proof:
    # The guarded form of A3: an essentially true fact stays essential
    # under any antecedent.
    l1 = "A(q -> p) & p -> A p"
    l3 = "O p & p -> O(q -> p)"
    return _proof(
        "K",
        (l1, Axiom("A3")),
        (_nest(l1, l3), Taut()),
        (l3, MP(1, 2)),
    )


def _bridge_contingent_to_accident() -> Proof:
    return _proof("K", ("C p -> A p | A ~p", Axiom("A6")))


def _bridge_accidents_to_contingent() -> Proof:
    return _proof("K", ("A(p -> q) & A(~p -> r) -> C p", Axiom("A7")))


def _noncon_of_falsum_serial() -> Proof:
    # With at least one successor around, falsity can never be contingent:
    # no successor satisfies it.  R2 on the tautology ~false supplies
    # O ~false, which A6 + A1 turn into D false.
    l1 = "C false -> A false | A ~false"
    l2 = "A false -> false"
    l3 = "~false"
    l4 = "O ~false"
    l8 = "D false"
    return _proof(
        "KD",
        (l1, Axiom("A6")),
        (l2, Axiom("A1")),
        (l3, Taut()),
        (l4, R2(3)),
        (_nest(l1, l2, _nest(l4, l8)), Taut()),
        (_nest(l2, _nest(l4, l8)), MP(1, 5)),
        (_nest(l4, l8), MP(2, 6)),
        (l8, MP(4, 7)),
    )


def _accident_implies_contingent_reflexive() -> Proof:
    # On reflexive frames an accidental truth is contingent: the witness
    # against necessity also witnesses contingency, and AT rules out the
    # degenerate successor-free case.
    l1 = "D p & p -> O(~p -> p)"
    l2 = "(~p -> p) <-> p"
    l3 = "O(~p -> p) <-> O p"
    l4 = "A p -> p"
    l8 = "A p -> C p"
    return _proof(
        "T",
        (l1, Axiom("AT")),
        (l2, Taut()),
        (l3, R4(2)),
        (l4, Axiom("A1")),
        (_nest(l1, l3, l4, l8), Taut()),
        (_nest(l3, l4, l8), MP(1, 5)),
        (_nest(l4, l8), MP(3, 6)),
        (l8, MP(4, 7)),
    )


# --------------------------------------------------------------------------
# transitive spread: D p -> D D p & D O p & O D p & O O p
# --------------------------------------------------------------------------


def _noncon_spread_transitive() -> Proof:
    # The four conjuncts are derived separately and glued at the end.
    #   D D p : axiom A4-1 outright.
    #   O D p : axiom A4-2 at psi := true, collapsing the vacuous guard.
    #   O O p : axiom A4-4 at psi1 := O p, psi2 := false.  Its guard
    #           O(~O p -> p) is a theorem: it is O(A p -> p) re-guarded,
    #           and that is R2 on axiom A1.  The conclusion collapses to
    #           O O p through three R4 rewrites.
    #   D O p : case split on A p.  When O p holds, O O p plus the
    #           workhorse lemma on O p give D O p.  When A p holds, the
    #           cover-transfer argument applied to A p (with guard ~p)
    #           yields D A p, and A2 flips it to D O p; the A7/A(~p->false)
    #           branch rules out an accidental p -> A p.
    a1 = "A p -> p"
    dd = "D p -> D D p"
    # O D p block
    b3 = "D p -> O(true -> D p)"
    b4 = "(true -> D p) <-> D p"
    b5 = "O(true -> D p) <-> O D p"
    b8 = "D p -> O D p"
    # O O p block
    d9 = "O(A p -> p)"
    d10 = "(A p -> p) <-> (~O p -> p)"
    d11 = "O(A p -> p) <-> O(~O p -> p)"
    d12 = "A O p & D p & O(~O p -> p) -> O(~O p -> O(~false -> p))"
    d13 = "(~false -> p) <-> p"
    d14 = "O(~false -> p) <-> O p"
    d16 = "(~O p -> O(~false -> p)) <-> (~O p -> O p)"
    d17 = "O(~O p -> O(~false -> p)) <-> O(~O p -> O p)"
    d18 = "(~O p -> O p) <-> O p"
    d19 = "O(~O p -> O p) <-> O O p"
    d25 = "D p -> O O p"
    # D O p block
    c26 = "(A p -> p) -> ((~p -> A p) <-> p)"
    c27 = "(~p -> A p) <-> p"
    c28 = "D(~p -> A p) <-> D p"
    c29 = "C(~A p -> ~p) -> A(~A p -> ~p) | A ~(~A p -> ~p)"
    c30 = "A ~(~A p -> ~p) -> ~(~A p -> ~p)"
    c33 = "O(~A p -> ~p) & (~A p -> ~p) -> D(~A p -> ~p)"
    c35 = "O(~A p -> ~p) & A p -> D(~A p -> ~p)"
    c36 = "(~A p -> ~p) <-> (~~p -> A p)"
    c37 = "D(~A p -> ~p) <-> D(~~p -> A p)"
    c38 = "C((~p -> A p) & (~~p -> A p)) -> C(~p -> A p) | C(~~p -> A p)"
    c39 = "(~p -> A p) & (~~p -> A p) <-> A p"
    c40 = "D((~p -> A p) & (~~p -> A p)) <-> D A p"
    c43 = "D(~p -> A p) & D(~~p -> A p) -> D A p"
    c47 = "D(~p -> A p) & O(~A p -> ~p) & A p -> D A p"
    c48 = "C A p <-> C ~A p"
    c49 = "(p -> A p) <-> (~A p -> ~p)"
    c50 = "O(p -> A p) <-> O(~A p -> ~p)"
    c51 = "A(p -> A p) & A(~p -> false) -> C p"
    c52 = "(~p -> false) <-> p"
    c53 = "O(~p -> false) <-> O p"
    c54 = "C O p -> A O p | A ~O p"
    c55 = "A ~O p -> ~O p"
    c58 = "O O p & O p -> D O p"
    c67 = "D p -> D O p"
    spread = "D p -> D D p & D O p & O D p & O O p"
    return _proof(
        "K4",
        (a1, Axiom("A1")),
        (dd, Axiom("A4-1")),
        (b3, Axiom("A4-2")),
        (b4, Taut()),
        (b5, R4(4)),
        (_nest(b3, b5, b8), Taut()),
        (_nest(b5, b8), MP(3, 6)),
        (b8, MP(5, 7)),
        (d9, R2(1)),
        (d10, Taut()),
        (d11, R4(10)),
        (d12, Axiom("A4-4")),
        (d13, Taut()),
        (d14, R4(13)),
        (_nest(d14, d16), Taut()),
        (d16, MP(14, 15)),
        (d17, R4(16)),
        (d18, Taut()),
        (d19, R4(18)),
        (_nest(d9, d11, d12, d17, d19, d25), Taut()),
        (_nest(d11, d12, d17, d19, d25), MP(9, 20)),
        (_nest(d12, d17, d19, d25), MP(11, 21)),
        (_nest(d17, d19, d25), MP(12, 22)),
        (_nest(d19, d25), MP(17, 23)),
        (d25, MP(19, 24)),
        (c26, Taut()),
        (c27, MP(1, 26)),
        (c28, R3(27)),
        (c29, Axiom("A6")),
        (c30, Axiom("A1")),
        (_nest(c29, c30, c33), Taut()),
        (_nest(c30, c33), MP(29, 31)),
        (c33, MP(30, 32)),
        (_nest(c33, c35), Taut()),
        (c35, MP(33, 34)),
        (c36, Taut()),
        (c37, R3(36)),
        (c38, Axiom("A4")),
        (c39, Taut()),
        (c40, R3(39)),
        (_nest(c38, c40, c43), Taut()),
        (_nest(c40, c43), MP(38, 41)),
        (c43, MP(40, 42)),
        (_nest(c35, c37, c43, c47), Taut()),
        (_nest(c37, c43, c47), MP(35, 44)),
        (_nest(c43, c47), MP(37, 45)),
        (c47, MP(43, 46)),
        (c48, Axiom("A2")),
        (c49, Taut()),
        (c50, R4(49)),
        (c51, Axiom("A7")),
        (c52, Taut()),
        (c53, R4(52)),
        (c54, Axiom("A6")),
        (c55, Axiom("A1")),
        (_nest(c54, c55, c58), Taut()),
        (_nest(c55, c58), MP(54, 56)),
        (c58, MP(55, 57)),
        (_nest(d25, c28, c47, c48, c50, c51, c53, c58, c67), Taut()),
        (_nest(c28, c47, c48, c50, c51, c53, c58, c67), MP(25, 59)),
        (_nest(c47, c48, c50, c51, c53, c58, c67), MP(28, 60)),
        (_nest(c48, c50, c51, c53, c58, c67), MP(47, 61)),
        (_nest(c50, c51, c53, c58, c67), MP(48, 62)),
        (_nest(c51, c53, c58, c67), MP(50, 63)),
        (_nest(c53, c58, c67), MP(51, 64)),
        (_nest(c58, c67), MP(53, 65)),
        (c67, MP(58, 66)),
        (_nest(dd, b8, d25, c67, spread), Taut()),
        (_nest(b8, d25, c67, spread), MP(2, 68)),
        (_nest(d25, c67, spread), MP(8, 69)),
        (_nest(c67, spread), MP(25, 70)),
        (spread, MP(67, 71)),
    )


# --------------------------------------------------------------------------
# announcements: Moore sentences are self-refuting, their negations
# successful.
# --------------------------------------------------------------------------

_MOORE_SELF_REFUTING_STEPS: tuple[tuple[str, object], ...] = (
    ("[!A p]~A p <-> (A p -> ~[!A p]A p)", Axiom("AN")),
    ("[!A p]A p <-> (A p -> A [!A p]p)", Axiom("AAcc")),
    ("[!A p]p <-> (A p -> p)", Axiom("AP")),
    ("O [!A p]p <-> O(A p -> p)", R4(3)),
    (
        "(O [!A p]p <-> O(A p -> p)) -> (A [!A p]p <-> A(A p -> p))",
        Taut(),
    ),
    ("A [!A p]p <-> A(A p -> p)", MP(4, 5)),
    ("A p -> p", Axiom("A1")),
    ("O(A p -> p)", R2(7)),
    (
        _nest(
            "[!A p]~A p <-> (A p -> ~[!A p]A p)",
            "[!A p]A p <-> (A p -> A [!A p]p)",
            "A [!A p]p <-> A(A p -> p)",
            "O(A p -> p)",
            "[!A p]~A p",
        ),
        Taut(),
    ),
    (
        _nest(
            "[!A p]A p <-> (A p -> A [!A p]p)",
            "A [!A p]p <-> A(A p -> p)",
            "O(A p -> p)",
            "[!A p]~A p",
        ),
        MP(1, 9),
    ),
    (
        _nest(
            "A [!A p]p <-> A(A p -> p)",
            "O(A p -> p)",
            "[!A p]~A p",
        ),
        MP(2, 10),
    ),
    (_nest("O(A p -> p)", "[!A p]~A p"), MP(6, 11)),
    ("[!A p]~A p", MP(8, 12)),
)

_MOORE_NEGATION_STEPS: tuple[tuple[str, object], ...] = (
    ("[!~A p]~A p <-> (~A p -> ~[!~A p]A p)", Axiom("AN")),
    ("[!~A p]A p <-> (~A p -> A [!~A p]p)", Axiom("AAcc")),
    ("[!~A p]p <-> (~A p -> p)", Axiom("AP")),
    ("O [!~A p]p <-> O(~A p -> p)", R4(3)),
    (
        "(O [!~A p]p <-> O(~A p -> p)) -> (A [!~A p]p <-> A(~A p -> p))",
        Taut(),
    ),
    ("A [!~A p]p <-> A(~A p -> p)", MP(4, 5)),
    # An accidental cover of ~A p forces A p whether or not p holds; the
    # true case is A3, the false case is A1 plus propositional logic.
    ("A(~A p -> p) & p -> A p", Axiom("A3")),
    ("A(~A p -> p) -> (~A p -> p)", Axiom("A1")),
    (
        _nest(
            "[!~A p]~A p <-> (~A p -> ~[!~A p]A p)",
            "[!~A p]A p <-> (~A p -> A [!~A p]p)",
            "A [!~A p]p <-> A(~A p -> p)",
            "A(~A p -> p) & p -> A p",
            "A(~A p -> p) -> (~A p -> p)",
            "[!~A p]~A p",
        ),
        Taut(),
    ),
    (
        _nest(
            "[!~A p]A p <-> (~A p -> A [!~A p]p)",
            "A [!~A p]p <-> A(~A p -> p)",
            "A(~A p -> p) & p -> A p",
            "A(~A p -> p) -> (~A p -> p)",
            "[!~A p]~A p",
        ),
        MP(1, 9),
    ),
    (
        _nest(
            "A [!~A p]p <-> A(~A p -> p)",
            "A(~A p -> p) & p -> A p",
            "A(~A p -> p) -> (~A p -> p)",
            "[!~A p]~A p",
        ),
        MP(2, 10),
    ),
    (
        _nest(
            "A(~A p -> p) & p -> A p",
            "A(~A p -> p) -> (~A p -> p)",
            "[!~A p]~A p",
        ),
        MP(6, 11),
    ),
    (
        _nest("A(~A p -> p) -> (~A p -> p)", "[!~A p]~A p"),
        MP(7, 12),
    ),
    ("[!~A p]~A p", MP(8, 13)),
)


def _moore_self_refuting() -> Proof:
    return _proof("PAL-K", *_MOORE_SELF_REFUTING_STEPS)


def _moore_negation_successful() -> Proof:
    return _proof("PAL-K", *_MOORE_NEGATION_STEPS)


def _shift(
    steps: tuple[tuple[str, object], ...], offset: int
) -> tuple[tuple[str, object], ...]:
    """Renumber a step block so it can be appended after ``offset`` lines."""

    def bump(just: object) -> object:
        if isinstance(just, MP):
            return MP(just.antecedent + offset, just.implication + offset)
        if isinstance(just, (R1, R2, R3, R4)):
            return type(just)(just.source + offset)
        return just

    return tuple((text, bump(just)) for text, just in steps)


def _announce_whether_moore() -> Proof:
    # Announcing whether p is an unknown truth settles it either way:
    # [?psi]phi unfolds to [!psi]phi & [!~psi]phi, and both halves are the
    # Moore derivations above, inlined.
    first = _MOORE_SELF_REFUTING_STEPS
    second = _shift(_MOORE_NEGATION_STEPS, len(first))
    n = len(first) + len(second)
    glue = (
        (_nest("[!A p]~A p", "[!~A p]~A p", "[? A p]~A p"), Taut()),
        (_nest("[!~A p]~A p", "[? A p]~A p"), MP(len(first), n + 1)),
        ("[? A p]~A p", MP(n, n + 2)),
    )
    return _proof("PAL-K", *first, *second, *glue)


_BUILDERS: tuple[tuple[str, str, str], ...] = (
    (
        "fact-circ-to-delta",
        "K",
        "an essential truth is non-contingent",
    ),
    (
        "noncon-conjunction-2",
        "K",
        "non-contingency is closed under binary conjunction",
    ),
    (
        "noncon-conjunction-3",
        "K",
        "non-contingency is closed under ternary conjunction",
    ),
    (
        "ess-conjunction-2",
        "K",
        "essence is closed under binary conjunction",
    ),
    (
        "ess-conjunction-3",
        "K",
        "essence is closed under ternary conjunction",
    ),
    (
        "guarded-noncon-transfer-1",
        "K",
        "one non-contingent guard transfers non-contingency to p or p holds",
    ),
    (
        "guarded-noncon-transfer-2",
        "K",
        "two non-contingent guards transfer non-contingency to p or p holds",
    ),
    (
        "noncon-from-cover-1",
        "K",
        "a true p guarded by one essential cover is non-contingent",
    ),
    (
        "noncon-from-cover-2",
        "K",
        "a true p guarded by two essential covers is non-contingent",
    ),
    (
        "ess-from-cover-1",
        "K",
        "one essential cover makes p essential",
    ),
    (
        "ess-from-cover-2",
        "K",
        "two essential covers make p essential",
    ),
    (
        "ess-diluted",
        "K",
        "an essential truth stays essential under any antecedent",
    ),
    (
        "bridge-contingent-to-accident",
        "K",
        "a contingent formula is accidental one way or the other",
    ),
    (
        "bridge-accidents-to-contingent",
        "K",
        "jointly accidental covers force contingency",
    ),
    (
        "noncon-of-falsum-serial",
        "KD",
        "falsity is never contingent when successors exist",
    ),
    (
        "accident-implies-contingent-reflexive",
        "T",
        "over reflexive frames every accident is contingent",
    ),
    (
        "noncon-spread-transitive",
        "K4",
        "over transitive frames non-contingency spreads one step out",
    ),
    (
        "moore-self-refuting",
        "PAL-K",
        "announcing an unknown truth refutes its being an unknown truth",
    ),
    (
        "moore-negation-successful",
        "PAL-K",
        "announcing the negation of an unknown truth is successful",
    ),
    (
        "announce-whether-moore",
        "PAL-K",
        "announcing whether p is an unknown truth settles it",
    ),
)

_FACTORIES = {
    "fact-circ-to-delta": _fact_circ_to_delta,
    "noncon-conjunction-2": _noncon_conjunction_2,
    "noncon-conjunction-3": _noncon_conjunction_3,
    "ess-conjunction-2": _ess_conjunction_2,
    "ess-conjunction-3": _ess_conjunction_3,
    "guarded-noncon-transfer-1": _guarded_noncon_transfer_1,
    "guarded-noncon-transfer-2": _guarded_noncon_transfer_2,
    "noncon-from-cover-1": _noncon_from_cover_1,
    "noncon-from-cover-2": _noncon_from_cover_2,
    "ess-from-cover-1": _ess_from_cover_1,
    "ess-from-cover-2": _ess_from_cover_2,
    "ess-diluted": _ess_diluted,
    "bridge-contingent-to-accident": _bridge_contingent_to_accident,
    "bridge-accidents-to-contingent": _bridge_accidents_to_contingent,
    "noncon-of-falsum-serial": _noncon_of_falsum_serial,
    "accident-implies-contingent-reflexive": (
        _accident_implies_contingent_reflexive
    ),
    "noncon-spread-transitive": _noncon_spread_transitive,
    "moore-self-refuting": _moore_self_refuting,
    "moore-negation-successful": _moore_negation_successful,
    "announce-whether-moore": _announce_whether_moore,
}


def builtin_corpus() -> tuple[CorpusEntry, ...]:
    """All bundled derivations, in a stable order."""

    return tuple(
        CorpusEntry(name, system, note, _FACTORIES[name]())
        for name, system, note in _BUILDERS
    )


def corpus_entry(name: str) -> CorpusEntry:
    """Look up one bundled derivation by name."""

    for entry in builtin_corpus():
        if entry.name == name:
            return entry
    raise KeyError(f"no bundled proof named {name!r}")
