"""Verification suites: exhaustive or sampled checks of the tree correspondences.

Every suite returns a VerificationReport that stops at the first mismatch.
"""

import logging
import random
from enum import Enum
from math import gcd
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..arith.rational import Ratio
from ..arith.treewalk import (
    FlipWord,
    address_to_flipword,
    addresses_at_depth,
    addresses_to_depth,
    format_address,
    format_flipword,
    incoming_labels,
)
from ..config.manager import AppConfig
from ..errors import MiddleFlipError
from ..geometry.oracle import verify_det, verify_int_inc
from ..models.report import ReportBuilder, VerificationReport
from ..trees.classic import cw_locate, cw_node, farey_triple_node, sb_locate, sb_node
from ..trees.cluster import (
    FORM_TRANSITIONS,
    IntersectionMatrix,
    MatrixForm,
    classify_dual_form,
    classify_form,
    dual_matrix_of,
    flip_triple,
    gradient_triple_of,
    h_walk,
    h_walk_states,
    map_g,
    matrix_of,
    phi_flip,
    psi_flip,
    tree_d,
    tree_ddag,
)
from ..trees.words import (
    christoffel_word,
    path_oracle,
    verify_christoffel_main,
    verify_dual_christoffel,
    verify_morphism_closure,
)

logger = logging.getLogger(__name__)


class SuiteName(str, Enum):
    """Verification suites known to the ``verify`` command."""

    MAIN1 = "main1"
    MAIN2 = "main2"
    DUALITY = "duality"
    MAXIMALITY = "maximality"
    FORMS = "forms"
    INT_INC = "int-inc"
    DET = "det"
    CHRISTOFFEL = "christoffel"
    COHN = "cohn"
    CLOSURE = "closure"
    FAREY = "farey"
    PATHS = "paths"
    LOCATE = "locate"


class SuiteOptions(BaseModel):
    """Sizes for a suite run; each suite reads only the fields it needs."""

    depth: int = Field(default=12, ge=0, description="Deepest tree level visited")
    bound: int = Field(default=50, ge=1, description="Bound on fraction entries or word length")
    samples: int = Field(default=200, ge=1, description="Number of random samples")
    max_length: int = Field(default=20, ge=0, description="Longest random flip word")
    seed: int = Field(default=0, description="Seed for random sampling")

    model_config = ConfigDict(frozen=True)


def _where(word: FlipWord) -> str:
    return format_flipword(word) or "(root)"


def check_main1(options: SuiteOptions) -> VerificationReport:
    """map_g of every Tree(D) vector is the Stern-Brocot value at the same vertex."""
    run = ReportBuilder(SuiteName.MAIN1.value, depth=options.depth)
    for addr in addresses_to_depth(options.depth):
        word = address_to_flipword(addr)
        got, expected = map_g(tree_d(word)), sb_node(addr)
        run.tick()
        if got != expected:
            return run.fail(format_address(addr), f"map_g gives {got}, Stern-Brocot has {expected}")
    return run.done()


def check_main2(options: SuiteOptions) -> VerificationReport:
    """The h-walk along every flip word ends at the Calkin-Wilf value of the same vertex."""
    run = ReportBuilder(SuiteName.MAIN2.value, depth=options.depth)
    for addr in addresses_to_depth(options.depth):
        got, expected = h_walk(address_to_flipword(addr)), cw_node(addr)
        run.tick()
        if got != expected:
            return run.fail(format_address(addr), f"h-walk gives {got}, Calkin-Wilf has {expected}")
    return run.done()


def random_flipword(rng: random.Random, length: int) -> FlipWord:
    """A uniformly chosen valid flip word of the given length."""
    labels: List[int] = []
    previous = 3
    for _ in range(length):
        label = rng.choice([k for k in (1, 2, 3) if k != previous])
        labels.append(label)
        previous = label
    return tuple(labels)


def check_duality(options: SuiteOptions) -> VerificationReport:
    """Swapping the roles of the two triangulations transposes the intersection matrix.

    Also checks that a psi flip of the transposed matrix is the transposed
    matrix one step further along.
    """
    run = ReportBuilder(
        SuiteName.DUALITY.value,
        samples=options.samples,
        max_length=options.max_length,
        seed=options.seed,
    )
    rng = random.Random(options.seed)
    for _ in range(options.samples):
        word = random_flipword(rng, rng.randint(0, options.max_length))
        matrix = matrix_of(word)
        dual = dual_matrix_of(word)
        run.tick()
        if dual != matrix.transpose():
            return run.fail(_where(word), f"D(L_t, L) = {dual} is not the transpose of {matrix}")
        k = rng.choice([label for label in (1, 2, 3) if label != (word[-1] if word else 3)])
        flipped = psi_flip(dual, k)
        expected = matrix_of(word + (k,)).transpose()
        run.tick()
        if flipped != expected:
            return run.fail(_where(word), f"psi flip {k} gives {flipped}, expected {expected}")
    return run.done()


def check_maximality(options: SuiteOptions) -> VerificationReport:
    """Along every edge labeled k, Tree(D†) changes only entry k, which becomes the maximum.

    Also checks that the unused index of every h-walk state is the incoming
    edge label.
    """
    run = ReportBuilder(SuiteName.MAXIMALITY.value, depth=options.depth)
    for addr in addresses_to_depth(options.depth):
        if not addr:
            continue
        word = address_to_flipword(addr)
        k = word[-1]
        before, after = tree_ddag(word[:-1]), tree_ddag(word)
        if not (before.is_nonnegative() and after.is_nonnegative()):
            continue
        run.tick()
        for i in (1, 2, 3):
            if i != k and before.entry(i) != after.entry(i):
                return run.fail(_where(word), f"entry {i} changed from {before} to {after}")
        if any(after.entry(k) <= after.entry(i) for i in (1, 2, 3) if i != k):
            return run.fail(_where(word), f"entry {k} of {after} is not strictly maximal")
        if before.entry(k) >= max(before.entries):
            return run.fail(_where(word), f"entry {k} of {before} is already maximal")

    for addr in addresses_at_depth(options.depth):
        word = address_to_flipword(addr)
        for position, ((pair, _), incoming) in enumerate(
            zip(h_walk_states(word), incoming_labels(word))
        ):
            run.tick()
            if pair.unused != incoming:
                return run.fail(
                    _where(word[:position]),
                    f"index pair {pair} leaves {pair.unused} unused, incoming edge is {incoming}",
                )
    return run.done()


def check_forms(options: SuiteOptions) -> VerificationReport:
    """Matrix flips follow the six-arrow form diagram on both sides.

    Every phi flip must reproduce the matrix of the longer word and move the
    form along the diagram; the psi flip of the transposed matrix must do the
    same under the transposed classification; flipping back along the
    incoming edge must be refused.
    """
    run = ReportBuilder(SuiteName.FORMS.value, depth=options.depth)
    root = matrix_of(())
    run.tick()
    if classify_form(root) is not MatrixForm.FORM_I:
        return run.fail("(root)", f"root matrix {root} is in form {classify_form(root).value}")

    matrices: Dict[FlipWord, IntersectionMatrix] = {(): root}
    for addr in addresses_to_depth(options.depth):
        if not addr:
            continue
        word = address_to_flipword(addr)
        parent, k = matrices[word[:-1]], word[-1]
        child = phi_flip(parent, k)
        run.tick()
        if child != matrix_of(word):
            return run.fail(_where(word), f"phi flip gives {child}, walk gives {matrix_of(word)}")
        expected_form = FORM_TRANSITIONS.get((classify_form(parent), k))
        if classify_form(child) is not expected_form:
            return run.fail(
                _where(word), f"form {classify_form(child).value} breaks the diagram"
            )
        dual_child = psi_flip(parent.transpose(), k)
        if dual_child != child.transpose() or classify_dual_form(dual_child) is not expected_form:
            return run.fail(_where(word), f"psi flip gives {dual_child}")
        try:
            phi_flip(child, k)
        except MiddleFlipError:
            pass
        else:
            return run.fail(_where(word), f"flip {k} back toward the root was accepted")
        if len(word) < options.depth:
            matrices[word] = child
    return run.done()


def check_farey(options: SuiteOptions) -> VerificationReport:
    """Farey triples are unimodular, project to Stern-Brocot and agree with the gradient walk.

    Every flip of every triple is also checked to be an involution.
    """
    run = ReportBuilder(SuiteName.FAREY.value, depth=options.depth)
    for addr in addresses_to_depth(options.depth):
        word = address_to_flipword(addr)
        triple = farey_triple_node(word)
        run.tick()
        if triple.middle() != sb_node(addr):
            return run.fail(
                format_address(addr), f"middle of {triple} is not {sb_node(addr)}"
            )
        walked = gradient_triple_of(word)
        if walked != triple:
            return run.fail(format_address(addr), f"gradient walk gives {walked}, not {triple}")
        for k in (1, 2, 3):
            if flip_triple(flip_triple(triple, k), k) != triple:
                return run.fail(format_address(addr), f"flip {k} of {triple} is not an involution")
    return run.done()


def check_paths(options: SuiteOptions) -> VerificationReport:
    """The Christoffel word formula agrees with the step-by-step path for every x + y <= bound."""
    run = ReportBuilder(SuiteName.PATHS.value, bound=options.bound)
    for total in range(1, options.bound + 1):
        for y in range(total + 1):
            if gcd(y, total - y) != 1:
                continue
            slope = Ratio(y, total - y)
            run.tick()
            if christoffel_word(slope) != path_oracle(slope):
                return run.fail(
                    str(slope), f"formula {christoffel_word(slope)}, path {path_oracle(slope)}"
                )
    return run.done()


def check_locate(options: SuiteOptions) -> VerificationReport:
    """Locators invert the Stern-Brocot and Calkin-Wilf trees for every p + q <= bound."""
    run = ReportBuilder(SuiteName.LOCATE.value, bound=options.bound)
    for total in range(2, options.bound + 1):
        for p in range(1, total):
            if gcd(p, total - p) != 1:
                continue
            q = Ratio(p, total - p)
            run.tick()
            if sb_node(sb_locate(q)) != q:
                return run.fail(str(q), f"Stern-Brocot address {format_address(sb_locate(q))}")
            if cw_node(cw_locate(q)) != q:
                return run.fail(str(q), f"Calkin-Wilf address {format_address(cw_locate(q))}")
    return run.done()


SUITES: Dict[SuiteName, Callable[[SuiteOptions], VerificationReport]] = {
    SuiteName.MAIN1: check_main1,
    SuiteName.MAIN2: check_main2,
    SuiteName.DUALITY: check_duality,
    SuiteName.MAXIMALITY: check_maximality,
    SuiteName.FORMS: check_forms,
    SuiteName.INT_INC: lambda options: verify_int_inc(options.bound),
    SuiteName.DET: lambda options: verify_det(options.bound, options.samples, options.seed),
    SuiteName.CHRISTOFFEL: lambda options: verify_christoffel_main(options.depth),
    SuiteName.COHN: lambda options: verify_dual_christoffel(options.depth),
    SuiteName.CLOSURE: lambda options: verify_morphism_closure(options.bound),
    SuiteName.FAREY: check_farey,
    SuiteName.PATHS: check_paths,
    SuiteName.LOCATE: check_locate,
}


def resolve_options(
    suite: SuiteName,
    config: AppConfig,
    depth: Optional[int] = None,
    bound: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> SuiteOptions:
    """Fill the sizes a suite needs from explicit values, falling back to the configuration."""
    word_suites = {SuiteName.CHRISTOFFEL, SuiteName.COHN}
    default_bounds = {
        SuiteName.INT_INC: config.int_inc_bound,
        SuiteName.DET: config.det_bound,
        SuiteName.CLOSURE: config.closure_bound,
        SuiteName.PATHS: config.paths_bound,
        SuiteName.LOCATE: config.locate_bound,
    }
    default_depth = config.word_depth if suite in word_suites else config.cluster_depth
    return SuiteOptions(
        depth=default_depth if depth is None else depth,
        bound=default_bounds.get(suite, config.int_inc_bound) if bound is None else bound,
        samples=config.samples if samples is None else samples,
        max_length=config.max_word_length,
        seed=config.seed if seed is None else seed,
    )


def run_suite(suite: SuiteName, options: SuiteOptions) -> VerificationReport:
    """Run one suite by name."""
    logger.info(f"Starting suite {suite.value}")
    return SUITES[suite](options)
