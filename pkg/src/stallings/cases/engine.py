"""Injectivity cases and their refinement by case splitting.

A case is an inclusion morphism of pointed core graphs over a restricted
alphabet.  It resolves negatively when the morphism is not injective,
positively when the restrictions cover the target's Whitehead graph (so
every admissible homomorphism keeps both subdivisions folded and the
transported morphism injective), and is ambiguous otherwise.  An
ambiguous case splits along one missing Whitehead edge into at most five
refined cases, one per cancellation pattern of the two letters' images;
their union exhausts all admissible homomorphisms.  A case can also be
reduced to another by renaming its letters to words of the other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..errors import (
    EdgeNotMissingError,
    NotAmbiguousError,
    StallingsError,
)
from ..graph import (
    GraphMorphism,
    LabeledGraph,
    classify,
    core,
    extend_morphism,
    unique_pointed_morphism,
    unpointed_isomorphisms,
)
from ..functor import subdivide
from ..subgroups import Subgroup, gamma
from ..whitehead import (
    RestrictionSet,
    WhiteheadEdge,
    format_edge,
    whitehead_graph,
    word_link,
)
from ..words import (
    Alphabet,
    GroupHom,
    Letter,
    Word,
    free_reduce,
    invert,
    last_letter,
    parse_word,
)


@dataclass(frozen=True)
class InjectivityCase:
    """An inclusion morphism of pointed core graphs plus restrictions."""

    id: str
    restrictions: RestrictionSet
    morphism: GraphMorphism
    chain: tuple[GroupHom, ...] = ()

    @property
    def alphabet(self) -> Alphabet:
        return self.restrictions.alphabet

    @property
    def source(self) -> LabeledGraph:
        return self.morphism.source

    @property
    def target(self) -> LabeledGraph:
        return self.morphism.target

    def __repr__(self) -> str:
        return f"InjectivityCase({self.id!r})"


class Resolution(enum.Enum):
    NEGATIVE = "negative"
    POSITIVE = "positive"
    AMBIGUOUS = "ambiguous"


@dataclass(frozen=True)
class CaseResolution:
    kind: Resolution
    missing: frozenset[WhiteheadEdge]

    @property
    def missing_text(self) -> str:
        return ", ".join(sorted(format_edge(e) for e in self.missing))


def classify_case(case: InjectivityCase) -> CaseResolution:
    """Negative, positive, or ambiguous with the missing Whitehead edges."""
    if not classify(case.morphism).injective:
        return CaseResolution(Resolution.NEGATIVE, frozenset())
    missing = whitehead_graph(case.target).edges - case.restrictions.edges
    if not missing:
        return CaseResolution(Resolution.POSITIVE, frozenset())
    return CaseResolution(Resolution.AMBIGUOUS, frozenset(missing))


# -- substitution machinery ------------------------------------------------


def _letter_word(l: Letter) -> Word:
    return Word((l,))


def make_substitution(
    source: Alphabet, target: Alphabet, images_text: dict[str, str]
) -> GroupHom:
    """A homomorphism given by generator images, identity where omitted."""
    images: dict[str, Word] = {}
    for g in source.generators:
        if g in images_text:
            images[g] = parse_word(images_text[g])
        else:
            images[g] = _letter_word(Letter(g, 1))
    return GroupHom(source, target, images)


def _tau(phi: GroupHom, l: Letter) -> Letter:
    return last_letter(phi.letter_image(l))


def child_restrictions(
    parent: RestrictionSet, psi: GroupHom, add_edge: WhiteheadEdge | None
) -> frozenset[WhiteheadEdge] | None:
    """Transport restrictions through a substitution.

    Each edge is renamed through the images' last letters; the turns
    spelled by multi-letter images are added; for the identity and
    fresh-letter split shapes, the resolved edge itself is added.
    Returns None when a renaming degenerates, i.e. the substitution
    contradicts an existing restriction.
    """
    edges: set[WhiteheadEdge] = set()
    for e in parent.edges:
        a, b = tuple(e)
        ta, tb = _tau(psi, a), _tau(psi, b)
        if ta == tb:
            return None
        edges.add(frozenset((ta, tb)))
    for g in psi.source.generators:
        edges |= word_link(psi.images[g], psi.target).edges
    if add_edge is not None:
        edges.add(add_edge)
    return frozenset(edges)


def apply_substitution(
    case: InjectivityCase,
    case_id: str,
    psi: GroupHom,
    new_edges: frozenset[WhiteheadEdge],
) -> InjectivityCase:
    """Rebuild a case's graphs and morphism through a substitution."""
    src = core(subdivide(psi, case.source))
    tgt = core(subdivide(psi, case.target))
    m = unique_pointed_morphism(src, tgt)
    if m is None:
        raise StallingsError("substitution destroyed the inclusion morphism")
    return InjectivityCase(
        case_id,
        RestrictionSet(psi.target, new_edges),
        m,
        case.chain + (psi,),
    )


@dataclass(frozen=True)
class SplitCase:
    parent: str
    selector: WhiteheadEdge
    index: int
    substitution: GroupHom
    case: InjectivityCase


def _ordered_pair(alphabet: Alphabet, edge: WhiteheadEdge) -> tuple[Letter, Letter]:
    a, b = sorted(edge, key=alphabet.letter_index)
    return a, b


def _suffix_rules(
    alphabet: Alphabet, target: Alphabet, rules: list[tuple[Letter, Word]]
) -> GroupHom:
    """Build a substitution from 'letter gains suffix' rules.

    A rule (l, w) postfixes w to the image of the signed letter l; for an
    inverse letter that prefixes the inverse of w to the generator.
    """
    images = {g: _letter_word(Letter(g, 1)) for g in alphabet.generators}
    for l, w in rules:
        if l.sign > 0:
            images[l.gen] = free_reduce(images[l.gen].letters + w.letters)
        else:
            images[l.gen] = free_reduce(invert(w).letters + images[l.gen].letters)
    return GroupHom(alphabet, target, images)


def split_on_edge(
    case: InjectivityCase, edge: WhiteheadEdge, fresh: str | None = None
) -> list[SplitCase]:
    """Split an ambiguous case along one missing Whitehead edge.

    Up to five children: the letters' images (1) keep distinct last
    letters, (2) share a proper common suffix, named by a fresh letter,
    (3) the first ends with the whole of the second, (4) vice versa,
    (5) the images coincide.  Children whose restriction renaming
    degenerates are impossible and dropped.
    """
    res = classify_case(case)
    if res.kind is not Resolution.AMBIGUOUS:
        raise NotAmbiguousError(f"case {case.id} is {res.kind.value}")
    if edge not in res.missing:
        raise EdgeNotMissingError(f"{format_edge(edge)} is not missing in {case.id}")

    u = case.alphabet
    a, b = _ordered_pair(u, edge)
    t = fresh if fresh is not None else u.fresh_name()
    t_word = _letter_word(Letter(t, 1))
    extended = u.extended(t)

    candidates: list[tuple[int, GroupHom, WhiteheadEdge | None]] = [
        (1, make_substitution(u, u, {}), edge),
        (2, _suffix_rules(u, extended, [(a, t_word), (b, t_word)]), edge),
    ]
    if a.gen != b.gen:
        candidates.append(
            (3, _suffix_rules(u, u, [(a, _letter_word(b))]), None)
        )
        candidates.append(
            (4, _suffix_rules(u, u, [(b, _letter_word(a))]), None)
        )
        ident_image = _letter_word(a) if b.sign > 0 else invert(_letter_word(a))
        reduced_alphabet = u.without(b.gen)
        candidates.append(
            (
                5,
                GroupHom(
                    u,
                    reduced_alphabet,
                    {
                        g: (ident_image if g == b.gen else _letter_word(Letter(g, 1)))
                        for g in u.generators
                    },
                ),
                None,
            )
        )

    children: list[SplitCase] = []
    for index, psi, add_edge in candidates:
        edges = child_restrictions(case.restrictions, psi, add_edge)
        if edges is None:
            continue
        child = apply_substitution(case, f"{case.id}.{index}", psi, edges)
        children.append(SplitCase(case.id, edge, index, psi, child))
    return children


# -- comparing cases -------------------------------------------------------


def morphisms_unpointed_isomorphic(f1: GraphMorphism, f2: GraphMorphism) -> bool:
    """Do two morphisms agree up to base-point-free isomorphisms?

    Looks for isomorphisms of sources and targets making the square
    commute.
    """
    if (
        f1.source.n_vertices != f2.source.n_vertices
        or f1.target.n_vertices != f2.target.n_vertices
        or f1.source.n_half_edges != f2.source.n_half_edges
        or f1.target.n_half_edges != f2.target.n_half_edges
    ):
        return False
    for g_iso in unpointed_isomorphisms(f1.source, f2.source):
        h = extend_morphism(
            f1.target, f2.target, f1.vmap[0], f2.vmap[g_iso.vmap[0]]
        )
        if h is None or len(set(h.vmap)) != f2.target.n_vertices:
            continue
        if all(
            h.vmap[f1.vmap[v]] == f2.vmap[g_iso.vmap[v]]
            for v in range(f1.source.n_vertices)
        ) and all(
            h.emap[f1.emap[e]] == f2.emap[g_iso.emap[e]]
            for e in range(f1.source.n_half_edges)
        ):
            return True
    return False


def reduce_to(
    child: InjectivityCase,
    target: InjectivityCase,
    renaming: GroupHom,
    require_square: bool = False,
) -> bool:
    """Is the child an instance of the target under the renaming?

    The renaming sends the target's letters to words over the child's
    alphabet.  It must carry the target's restrictions into the child's
    (through last letters, with the spelled turns of multi-letter images
    also restricted, so that images stay cancellation free); then every
    admissible homomorphism out of the child composes to an admissible
    one out of the target.  The renamed graphs must reproduce the
    child's source and target up to base-point-free isomorphism.

    Usually the renamed inclusion also matches the child's as a
    commuting square of base-point-free isomorphisms; one recorded
    reduction differs from its target by an inner conjugation of the
    outer subgroup, so the square is only required when
    ``require_square`` is set.
    """
    if renaming.source.generators != target.alphabet.generators:
        return False
    if renaming.target.generators != child.alphabet.generators:
        return False
    for g in renaming.source.generators:
        w = renaming.images[g]
        if not w:
            return False
        if not word_link(w, renaming.target).edges <= child.restrictions.edges:
            return False
    for e in target.restrictions.edges:
        a, b = tuple(e)
        ta, tb = _tau(renaming, a), _tau(renaming, b)
        if ta == tb or frozenset((ta, tb)) not in child.restrictions.edges:
            return False
    src = core(subdivide(renaming, target.source))
    tgt = core(subdivide(renaming, target.target))
    m = unique_pointed_morphism(src, tgt)
    if m is None:
        return False
    if morphisms_unpointed_isomorphic(m, child.morphism):
        return True
    if require_square:
        return False
    return bool(
        unpointed_isomorphisms(src, child.source)
        and unpointed_isomorphisms(tgt, child.target)
    )


# -- the bundled example ----------------------------------------------------


def root_case() -> InjectivityCase:
    """The loop-inside-conjugate-pair inclusion over {a, b}.

    The inner subgroup is generated by b, the outer one by b and a b a^-1;
    the starting restriction records that the inner generator's image may
    be taken cyclically reduced.
    """
    ab = Alphabet.of("a", "b")
    h = Subgroup.of(ab, "b")
    k = Subgroup.of(ab, "b", "a b a^-1")
    m = unique_pointed_morphism(gamma(h), gamma(k))
    assert m is not None
    return InjectivityCase(
        "root", RestrictionSet.parse(ab, "b.b^-1"), m
    )


def initial_split(root: InjectivityCase) -> list[InjectivityCase]:
    """The four coordinate-change cases of the bundled example.

    Splits on the shape of the images of the two outer generators: both
    conjugating prefix and cyclic remainder trivial, only one trivial, or
    neither.
    """
    from .table import initial_cases  # data lives with the table

    return initial_cases(root)
