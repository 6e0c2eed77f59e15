"""The instances bundled with crossmod.

Every instance builds a validated strict action. Most also carry a strict
extension ending at the acting crossed module, so the same list drives the
fibre, duality, partial crossed product and decomposition suites.
"""

import itertools
from typing import Dict, List

import numpy as np

from crossmod.algebra import complex_numbers, functions_on, matrix_algebra
from crossmod.bundles import (
    finite_torus_action,
    group_action,
    inner_action,
    make_strict_action,
    pullback_action,
    translation_action,
    trivial_action,
)
from crossmod.groups import (
    cyclic,
    direct_product,
    image,
    quotient,
    symmetric,
)
from crossmod.modules import (
    decompose,
    example_extension,
    green_extension,
    group_crossed_module,
    identity_crossed_module,
    make_cm_hom,
    make_crossed_module,
    make_strict_extension,
    normal_subgroup_crossed_module,
    semidirect_crossed_module,
    trivial_crossed_module,
)
from crossmod.types import CorpusInstance, CrossedModule, StrictAction, StrictExtension

# A₃ inside S₃, with permutations listed lexicographically
ALTERNATING = (0, 3, 4)


def _permutation_matrices(n: int) -> np.ndarray:
    """Return P_p with P e_x = e_{p(x)}, in the element order of ``symmetric(n)``."""
    perms = sorted(itertools.permutations(range(n)))
    mats = np.zeros((len(perms), n, n))
    for i, p in enumerate(perms):
        mats[i, list(p), range(n)] = 1.0
    return mats


def _swap(n: int) -> np.ndarray:
    """Return the action of Z/n on C² through parity: odd elements swap the points."""
    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    return np.stack([np.linalg.matrix_power(swap, g % 2) for g in range(n)])


def whole_extension(C: CrossedModule) -> StrictExtension:
    """Return C ↣ C ↠ (1, 1)."""
    trivial = trivial_crossed_module()
    incl = make_cm_hom(C, C, np.arange(C.G.order), np.arange(C.H.order))
    proj = make_cm_hom(
        C, trivial, np.zeros(C.G.order, dtype=np.int64), np.zeros(C.H.order, dtype=np.int64)
    )
    return make_strict_extension(C, C, trivial, incl, proj, f"whole({C.name})")


def image_extension(C: CrossedModule) -> StrictExtension:
    """Return (∂H, H) ↣ C ↠ (G/∂H, 1)."""
    im = image(C.boundary)
    position = np.full(C.G.order, -1, dtype=np.int64)
    position[im.elements] = np.arange(im.order)
    C1 = make_crossed_module(
        im.group, C.H, position[C.boundary.map], C.conj[im.elements], f"∂({C.name})"
    )
    Q, projection = quotient(C.G, im)
    C3 = group_crossed_module(Q, "π₁")
    incl = make_cm_hom(C1, C, im.elements, np.arange(C.H.order))
    proj = make_cm_hom(C, C3, projection.map, np.zeros(C.H.order, dtype=np.int64))
    return make_strict_extension(C1, C, C3, incl, proj, f"image({C.name})")


def kernel_extension(C: CrossedModule) -> StrictExtension:
    """Return (1, ker ∂) ↣ C ↠ (G, H/ker ∂)."""
    return decompose(C).first


def _example_action(C: CrossedModule, act: StrictAction) -> StrictAction:
    """Pull a G-action back to (G⋉H, H) along (g, h) ↦ g."""
    C2 = semidirect_crossed_module(C)
    m = C.H.order
    to_group = make_cm_hom(
        C2,
        act.C,
        np.arange(C2.G.order) // m,
        np.zeros(C2.H.order, dtype=np.int64),
    )
    return pullback_action(act, to_group)


def trivial() -> StrictAction:
    """Return the trivial crossed module acting on ℂ."""
    return trivial_action(complex_numbers(), trivial_crossed_module(), "trivial")


def group_z2_swap() -> StrictAction:
    """Return Z/2 swapping the two points of C({0, 1})."""
    return translation_action(cyclic(2), "swap")


def finite_torus(n: int) -> StrictAction:
    """Return the finite noncommutative torus of size ``n``."""
    return finite_torus_action(n)


def green_z4_z2() -> StrictAction:
    """Return Z/4 acting trivially on ℂ."""
    return trivial_action(complex_numbers(), group_crossed_module(cyclic(4), "Z/4"), "C")


def extension_z2_z2() -> StrictAction:
    """Return (Z/2 ⋉ Z/2, Z/2) acting on C({0, 1}) through translation of Z/2."""
    C = identity_crossed_module(cyclic(2), "Z/2")
    return _example_action(C, translation_action(cyclic(2)))


def extension_z4_z2() -> StrictAction:
    """Return (Z/4 ⋉ Z/2, Z/2) acting on ℂ² through the parity of Z/4."""
    C = normal_subgroup_crossed_module(cyclic(4), [0, 2], "Z/4 ⊳ Z/2")
    return _example_action(C, group_action(functions_on(2), cyclic(4), _swap(4)))


def extension_s3_a3() -> StrictAction:
    """Return (S₃ ⋉ A₃, A₃) acting trivially on ℂ."""
    C = normal_subgroup_crossed_module(symmetric(3), ALTERNATING, "S₃ ⊳ A₃")
    return _example_action(C, trivial_action(complex_numbers(), group_crossed_module(C.G)))


def s3_kernel_z2() -> StrictAction:
    """Return (S₃, Z/2, trivial, trivial) acting on ℂ² with u₁ = (1, −1)."""
    C = make_crossed_module(symmetric(3), cyclic(2), np.zeros(2), None, "S₃ × Z/2[1]")
    alpha = np.broadcast_to(np.eye(2), (6, 2, 2))
    return make_strict_action(functions_on(2), C, alpha, [[1.0, 1.0], [1.0, -1.0]], "C²")


def thin_z3() -> StrictAction:
    """Return (Z/3, Z/3, id, trivial) acting on ℂ³ with u_h = (1, ωʰ, ω²ʰ)."""
    C = identity_crossed_module(cyclic(3), "Z/3")
    omega = np.exp(2j * np.pi / 3)
    u = omega ** np.outer(np.arange(3), np.arange(3))
    return make_strict_action(functions_on(3), C, np.broadcast_to(np.eye(3), (3, 3, 3)), u, "C³")


def thin_s3() -> StrictAction:
    """Return (S₃, S₃, id, conjugation) acting on M₃ by permutation matrices."""
    C = identity_crossed_module(symmetric(3), "S₃")
    return inner_action(matrix_algebra(3), C, _permutation_matrices(3).reshape(6, 9), "M₃")


def normal_subgroup_s3_a3() -> StrictAction:
    """Return (S₃, A₃, inclusion, conjugation) acting on M₃ by permutation matrices."""
    C = normal_subgroup_crossed_module(symmetric(3), ALTERNATING, "S₃ ⊳ A₃")
    return inner_action(matrix_algebra(3), C, _permutation_matrices(3).reshape(6, 9), "M₃")


def _klein_boundary(n: int) -> CrossedModule:
    """Return (Z/n, Z/2 × Z/2, (a, b) ↦ (n/2)·a, trivial)."""
    H = direct_product(cyclic(2), cyclic(2))
    boundary = (np.arange(4) // 2) * (n // 2)
    return make_crossed_module(cyclic(n), H, boundary, None, f"(Z/{n}, Z/2 × Z/2)")


def decomposition_z4_klein() -> StrictAction:
    """Return (Z/4, Z/2 × Z/2, (a, b) ↦ 2a, trivial) on ℂ with u_(a,b) = (−1)ᵃ."""
    C = _klein_boundary(4)
    u = (-1.0) ** (np.arange(4) // 2)
    return make_strict_action(complex_numbers(), C, np.ones((4, 1, 1)), u[:, None], "C")


def decomposition_z4_klein_c2() -> StrictAction:
    """Return the same crossed module on ℂ² with u_(a,b) = ((−1)ᵃ, (−1)ᵃ⁺ᵇ)."""
    C = _klein_boundary(4)
    a, b = np.arange(4) // 2, np.arange(4) % 2
    u = np.stack([(-1.0) ** a, (-1.0) ** (a + b)], axis=1)
    return make_strict_action(functions_on(2), C, np.broadcast_to(np.eye(2), (4, 2, 2)), u, "C²")


def decomposition_z6_klein() -> StrictAction:
    """Return (Z/6, Z/2 × Z/2, (a, b) ↦ 3a, trivial) on ℂ with u_(a,b) = (−1)ᵃ."""
    C = _klein_boundary(6)
    u = (-1.0) ** (np.arange(4) // 2)
    return make_strict_action(complex_numbers(), C, np.ones((6, 1, 1)), u[:, None], "C")


def decomposition_z4_z4() -> StrictAction:
    """Return (Z/4, Z/4, h ↦ 2h, trivial) on ℂ with u_h = (−1)ʰ."""
    C = make_crossed_module(cyclic(4), cyclic(4), (2 * np.arange(4)) % 4, None, "(Z/4, Z/4, ×2)")
    u = (-1.0) ** np.arange(4)
    return make_strict_action(complex_numbers(), C, np.ones((4, 1, 1)), u[:, None], "C")


HEAVY = ("takesaki", "roundtrip")

_INSTANCES: List[CorpusInstance] = [
    CorpusInstance(
        "trivial",
        "(1, 1) acting on ℂ.",
        trivial,
        lambda act: whole_extension(act.C),
    ),
    CorpusInstance(
        "group-z2-swap",
        "Z/2 swapping two points; the crossed product is M₂.",
        group_z2_swap,
        lambda act: green_extension(act.C.G, [0, 1]),
        automorphism=1,
    ),
    CorpusInstance(
        "finite-torus-2",
        "Finite noncommutative torus M₂ with (Z/2, Z/2, id).",
        lambda: finite_torus(2),
        lambda act: whole_extension(act.C),
        automorphism=1,
    ),
    CorpusInstance(
        "finite-torus-3",
        "Finite noncommutative torus M₃ with (Z/3, Z/3, id).",
        lambda: finite_torus(3),
        lambda act: whole_extension(act.C),
        automorphism=1,
        skip=("takesaki",),
    ),
    CorpusInstance(
        "finite-torus-4",
        "Finite noncommutative torus M₄ with (Z/4, Z/4, id).",
        lambda: finite_torus(4),
        lambda act: image_extension(act.C),
        skip=HEAVY,
    ),
    CorpusInstance(
        "green-z4-z2",
        "Z/4 acting trivially on ℂ, split along Z/2 ⊳ Z/4.",
        green_z4_z2,
        lambda act: green_extension(act.C.G, [0, 2]),
    ),
    CorpusInstance(
        "extension-z2-z2",
        "(H, 1) ↣ (G⋉H, H) ↠ C for C = (Z/2, Z/2, id) on C({0, 1}).",
        extension_z2_z2,
        lambda act: example_extension(identity_crossed_module(cyclic(2), "Z/2")),
        automorphism=2,
    ),
    CorpusInstance(
        "extension-z4-z2",
        "(H, 1) ↣ (G⋉H, H) ↠ C for C = (Z/4, Z/2 ⊳ Z/4) on ℂ².",
        extension_z4_z2,
        lambda act: example_extension(
            normal_subgroup_crossed_module(cyclic(4), [0, 2], "Z/4 ⊳ Z/2")
        ),
        skip=HEAVY,
    ),
    CorpusInstance(
        "extension-s3-a3",
        "(H, 1) ↣ (G⋉H, H) ↠ C for C = (S₃, A₃ ⊳ S₃) on ℂ.",
        extension_s3_a3,
        lambda act: example_extension(
            normal_subgroup_crossed_module(symmetric(3), ALTERNATING, "S₃ ⊳ A₃")
        ),
    ),
    CorpusInstance(
        "s3-kernel-z2",
        "2-Abelian (S₃, Z/2) with trivial boundary on ℂ²; G is not Abelian.",
        s3_kernel_z2,
        lambda act: kernel_extension(act.C),
    ),
    CorpusInstance(
        "thin-z3",
        "Thin (Z/3, Z/3, id) acting on ℂ³ by a character.",
        thin_z3,
        lambda act: whole_extension(act.C),
    ),
    CorpusInstance(
        "thin-s3",
        "Thin (S₃, S₃, id) acting on M₃ by permutation matrices.",
        thin_s3,
        lambda act: image_extension(act.C),
    ),
    CorpusInstance(
        "normal-subgroup-s3-a3",
        "(S₃, A₃, inclusion) acting on M₃ by permutation matrices.",
        normal_subgroup_s3_a3,
        lambda act: image_extension(act.C),
    ),
    CorpusInstance(
        "decomposition-z4-z2xz2",
        "(Z/4, Z/2 × Z/2, (a, b) ↦ 2a) on ℂ; kernel, thin part and cokernel all non-trivial.",
        decomposition_z4_klein,
        lambda act: kernel_extension(act.C),
    ),
    CorpusInstance(
        "decomposition-z4-z2xz2-c2",
        "(Z/4, Z/2 × Z/2, (a, b) ↦ 2a) on ℂ² with two characters.",
        decomposition_z4_klein_c2,
        lambda act: kernel_extension(act.C),
    ),
    CorpusInstance(
        "decomposition-z6-z2xz2",
        "(Z/6, Z/2 × Z/2, (a, b) ↦ 3a) on ℂ.",
        decomposition_z6_klein,
        lambda act: kernel_extension(act.C),
    ),
    CorpusInstance(
        "decomposition-z4-z4",
        "(Z/4, Z/4, h ↦ 2h) on ℂ.",
        decomposition_z4_z4,
        lambda act: kernel_extension(act.C),
    ),
]


def bundled_corpus() -> List[CorpusInstance]:
    """Return the bundled instances, sorted by name."""
    return sorted(_INSTANCES, key=lambda instance: instance.name)


def corpus_index() -> Dict[str, CorpusInstance]:
    """Return the bundled instances keyed by name."""
    return {instance.name: instance for instance in _INSTANCES}


def get_instance(name: str) -> CorpusInstance:
    """Return the instance called ``name``.

    Raises:
        ValueError: If there is no such instance.

    """
    index = corpus_index()
    if name not in index:
        raise ValueError(f"Unknown corpus instance '{name}'. Choose from {sorted(index)}.")
    return index[name]
