"""Stock frames, models, and formulas behind the bundled demonstration suite.

Everything here is plain data shared by the suite runner, the command-line
front end, and the test batteries: the singleton pair that possibility tells
apart while contingency cannot, the serial pair that needs two steps of
possibility, the frames on which the rival loop-dropping reductions break
frame validity, and the formula inventory behind the validity, definability,
and announcement checks.
"""

from __future__ import annotations

from .kripke import Frame, FrameClass, Model, PointedModel
from .proof import SYSTEMS
from .syntax import Atom, Formula, parse, substitute

__all__ = [
    "REFLEXIVE_POINT",
    "ARROWLESS_POINT",
    "SERIAL_LOOPED",
    "SERIAL_PLAIN",
    "LOOP_FRAME",
    "LASSO_FRAME",
    "ARROW_FRAME",
    "STRIPPED_ARROW_FRAME",
    "COMPLETE_PAIR_FRAME",
    "TWO_CYCLE_FRAME",
    "CONTINGENCY_AS_POSSIBILITY",
    "ACCIDENT_AS_POSSIBILITY",
    "CONTINGENT_IMPLIES_SOME_ACCIDENT",
    "ACCIDENT_COVER_WEAK",
    "ACCIDENT_COVER_STRONG",
    "NECESSITY_ALMOST_DEFINABLE",
    "TRANSITIVITY_FORMULA",
    "SYMMETRY_FORMULA",
    "NONCON_SPREAD",
    "ESSENCE_OF_ATOM",
    "NONCONTINGENCY_OF_ATOM",
    "MOORE_UNSUCCESSFUL",
    "MOORE_SELF_REFUTING",
    "MOORE_NEGATION_SUCCESSFUL",
    "MOORE_WHETHER",
    "GENERIC_BINDING",
    "axiom_instance",
    "validity_battery",
]


# ---------------------------------------------------------------------------
# Pointed-model pairs for the expressivity searches

# a single world that sees itself vs. one that sees nothing, both with p:
# possibility of truth splits them, contingency and accident never do
REFLEXIVE_POINT = PointedModel(
    Model(Frame.from_pairs(("s",), [("s", "s")]), {"p": 0b1}), "s"
)
ARROWLESS_POINT = PointedModel(
    Model(Frame.from_pairs(("s",), []), {"p": 0b1}), "s"
)

# two serial models alternating between a p world and a ¬p world; the
# looped variant's second world also sees itself, which two nested
# possibility steps (or one accident of a noncontingency) can detect
SERIAL_LOOPED = PointedModel(
    Model(
        Frame.from_pairs(("s", "t"), [("s", "t"), ("t", "t"), ("t", "s")]),
        {"p": 0b01},
    ),
    "s",
)
SERIAL_PLAIN = PointedModel(
    Model(Frame.from_pairs(("s", "t"), [("s", "t"), ("t", "s")]), {"p": 0b01}),
    "s",
)


# ---------------------------------------------------------------------------
# Frames for the reduction arguments

# the mirror reduction strips these while preserving every ∇/•-formula,
# so the properties they carry (and their reductions lack) are undefinable:
# LOOP_FRAME is reflexive and serial, LASSO_FRAME Euclidean and convergent
LOOP_FRAME = Frame.from_pairs(("s",), [("s", "s")])
LASSO_FRAME = Frame.from_pairs(("s", "t"), [("s", "t"), ("t", "t")])

# dropping the arrow to a *sole successor* (not merely a pure loop) is too
# aggressive: the stripped arrow validates ∘p, the arrow itself refutes it
ARROW_FRAME = Frame.from_pairs(("s", "t"), [("s", "t")])
STRIPPED_ARROW_FRAME = Frame.from_pairs(("s", "t"), [])

# dropping *accompanied* loops is too aggressive as well: the bare
# two-cycle validates Δp, the complete two-world frame refutes it
COMPLETE_PAIR_FRAME = Frame.from_pairs(
    ("s", "t"), [("s", "s"), ("s", "t"), ("t", "s"), ("t", "t")]
)
TWO_CYCLE_FRAME = Frame.from_pairs(("s", "t"), [("s", "t"), ("t", "s")])

ESSENCE_OF_ATOM = parse("O p")
NONCONTINGENCY_OF_ATOM = parse("D p")


# ---------------------------------------------------------------------------
# Formula inventory

# the two defining equivalences in the possibility language
CONTINGENCY_AS_POSSIBILITY = parse("C p <-> <>p & <>~p")
ACCIDENT_AS_POSSIBILITY = parse("A p <-> p & <>~p")

# what contingency reveals about accident, and the cover that almost
# but not quite pins the accident down
CONTINGENT_IMPLIES_SOME_ACCIDENT = parse("C p -> A p | A ~p")
ACCIDENT_COVER_WEAK = parse("A(p -> q) & A(~p -> r) -> A p | A ~p")
ACCIDENT_COVER_STRONG = parse("A(p -> q) & A(~p -> r) -> A p")

# necessity recovered from noncontingency and essence under a live accident
NECESSITY_ALMOST_DEFINABLE = parse("A q -> ([]p <-> D p & O(~q -> p))")

# frame-definability formulas: the first matches exactly the transitive
# frames, the second exactly the symmetric ones
TRANSITIVITY_FORMULA = parse("A q & D p & O(~q -> p) -> O(~q -> O(~r -> p))")
SYMMETRY_FORMULA = parse("A(p -> A p) -> p")

# on transitive frames noncontingency spreads through both operators
NONCON_SPREAD = parse("D p -> D D p & D O p & O D p & O O p")

# announcing an accident destroys it; announcing its absence does not
MOORE_UNSUCCESSFUL = parse("[!A p]A p")
MOORE_SELF_REFUTING = parse("[!A p]~A p")
MOORE_NEGATION_SUCCESSFUL = parse("[!~A p]~A p")
MOORE_WHETHER = parse("[?A p]~A p")


# ---------------------------------------------------------------------------
# Axiom instances

GENERIC_BINDING = {"_phi": Atom("p"), "_psi": Atom("q"), "_chi": Atom("r")}


def axiom_instance(system: str, name: str) -> Formula:
    """The ``{φ:=p, ψ:=q, χ:=r}`` instance of a named axiom schema."""
    schema = SYSTEMS[system].axioms[name]
    return substitute(schema.pattern, GENERIC_BINDING)


def validity_battery() -> tuple[tuple[str, Formula, FrameClass], ...]:
    """The stock validity checks: (slug, formula, frame class) triples.

    The named equivalences and covers run over all frames; the axiom
    instances run over the frame class their system is sound for.
    """
    rows: list[tuple[str, Formula, FrameClass]] = [
        ("contingency-as-possibility", CONTINGENCY_AS_POSSIBILITY, FrameClass.K),
        ("accident-as-possibility", ACCIDENT_AS_POSSIBILITY, FrameClass.K),
        (
            "contingent-implies-some-accident",
            CONTINGENT_IMPLIES_SOME_ACCIDENT,
            FrameClass.K,
        ),
        ("accident-cover-weak", ACCIDENT_COVER_WEAK, FrameClass.K),
        ("necessity-almost-definable", NECESSITY_ALMOST_DEFINABLE, FrameClass.K),
    ]
    for name in sorted(SYSTEMS["K"].axioms):
        rows.append((f"axiom-{name.lower()}", axiom_instance("K", name), FrameClass.K))
    rows.append(("axiom-at", axiom_instance("T", "AT"), FrameClass.T))
    for name in sorted(set(SYSTEMS["K4"].axioms) - set(SYSTEMS["K"].axioms)):
        rows.append(
            (f"axiom-{name.lower()}", axiom_instance("K4", name), FrameClass.FOUR)
        )
    return tuple(rows)
