#!/usr/bin/env python3
"""
Full check run
Reproduces every headline result from the bundled data, step by step
"""

import sys
import os
from datetime import datetime
from pathlib import Path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np

from src.fusion.a00 import K0Element, SimpleLabel, dim, fusion_table, is_splitting, k0_mul, tensor
from src.hecke.quantum_algebra import commutant_dim, detect_birank11, fusion_multiplicity_square_sum
from src.hecke.symmetry import flip, manin_standard, q_rank, super_flip, verify_all
from src.hopf.algebra import validate
from src.hopf.comodule import hom_dim, regular_comodule, simple_comodules, trivial_comodule
from src.hopf.integrals import (
    Side,
    bilinear_form_b,
    composed_right_integral,
    convolution_is_associative,
    find_integral,
    first_identity_holds,
    integral_space,
    is_integral,
    second_identity_holds,
)
from src.hopf.splitting import projectivity_oracle, splitting_test
from src.io.formats import load_comodule, load_hopf
from src.utils.config import get_settings
from src.utils.logger import log_section, setup_logger

Q_VALUES = ["3", "5", "7/2", "1"]
# simple comodules that are not characters of grouplike basis elements
EXTRA_SIMPLES = {"o_s3": ["o_s3_std"]}
PROJECT_ROOT = Path(__file__).resolve().parent.parent


def check_hecke(logger) -> bool:
    ok = True
    for q in Q_VALUES:
        report = verify_all(manin_standard(q))
        logger.info(f"   q={q}: ybe={report.ybe} hecke={report.hecke} closed={report.closed} qrank={report.qrank}")
        ok &= report.all_pass and report.qrank == "0/1"
    ok &= q_rank(flip(2)) == 2 and q_rank(super_flip()) == 0
    return ok


def check_poincare(logger) -> bool:
    verdict = detect_birank11(manin_standard(3), 6)
    logger.info(f"   Λ dims {verdict.table.dims}, a={verdict.table.fitted_a} b={verdict.table.fitted_b}")
    return verdict.is_birank11 and verdict.table.dims == [1, 2, 2, 2, 2, 2, 2]


def check_commutant(logger, max_degree: int) -> bool:
    ok = True
    h = manin_standard(3)
    for n in range(2, max_degree + 1):
        value = commutant_dim(h, n, cap=max_degree)
        expected = fusion_multiplicity_square_sum(n)
        logger.info(f"   n={n}: commutant {value}, expected {expected}")
        ok &= value == expected
    return ok


def check_fusion(logger, seed: int) -> bool:
    failures = sum(not row.dimension_ok for row in fusion_table(6))
    rng = np.random.default_rng(seed)

    def label():
        m, n = rng.integers(-6, 7, size=2)
        return SimpleLabel(int(m), int(n))

    for _ in range(1000):
        x, y, z = (K0Element.of(label()) for _ in range(3))
        failures += k0_mul(k0_mul(x, y), z) != k0_mul(x, k0_mul(y, z))
        failures += k0_mul(x, y) != k0_mul(y, x)
        failures += k0_mul(x, y).dual() != k0_mul(y.dual(), x.dual())
    for _ in range(1000):
        a = label()
        failures += is_splitting(a) != (dim(a) == 2)
        failures += tensor(a, SimpleLabel(1, -1)).factors != K0Element.of(SimpleLabel(a.m + 1, a.n - 1))
    logger.info(f"   {failures} failures")
    return failures == 0


def check_hopf(logger, data_dir: Path) -> bool:
    ok = True
    for name in ["kc2", "kc3", "kc4", "sweedler4", "o_s3"]:
        h = load_hopf(data_dir / "hopf" / f"{name}.json")
        ok &= validate(h).ok
        ok &= all(len(integral_space(h, side)) == 1 for side in Side)
        lam_l, lam_r = find_integral(h, Side.LEFT), find_integral(h, Side.RIGHT)
        ok &= bilinear_form_b(h, lam_l).rank() == h.n
        ok &= is_integral(h, composed_right_integral(h, lam_l).covector, Side.RIGHT)
        ok &= first_identity_holds(h, lam_l) and second_identity_holds(h, lam_r)
        ok &= convolution_is_associative(h, lam_l)
        extra = [load_comodule(data_dir / "comodules" / f"{c}.json") for c in EXTRA_SIMPLES.get(name, [])]
        for m in [*simple_comodules(h), *extra]:
            split = splitting_test(h, m).splitting
            oracle = projectivity_oracle(h, m)
            logger.info(f"   {h.name} {m.name}: splitting={split} oracle={oracle}")
            ok &= split == oracle
    return ok


def check_hom(logger, data_dir: Path) -> bool:
    h = load_hopf(data_dir / "hopf" / "sweedler4.json")
    regular = regular_comodule(h)
    ok = True
    for m in [trivial_comodule(h), *simple_comodules(h)[1:], regular]:
        value = hom_dim(h, regular, m)
        logger.info(f"   Hom(H, {m.name}) = {value}, dim = {m.dim}")
        ok &= value == m.dim
    return ok


def resolve_data_dir(configured: str) -> Path:
    """Relative data directories are taken from the project root, not the working directory"""
    data_dir = Path(configured)
    return data_dir if data_dir.is_absolute() else PROJECT_ROOT / data_dir


def main():
    """Run every check; exit nonzero if any step failed"""

    logger = setup_logger(**get_settings().logging_params)
    settings = get_settings()
    data_dir = resolve_data_dir(settings.DATA_DIR)

    log_section(f"CHECK RUN STARTED: {datetime.now()}")

    steps = [
        ("Hecke axioms and q-rank", lambda: check_hecke(logger)),
        ("Poincaré series of the antisymmetric algebra", lambda: check_poincare(logger)),
        ("Comodule endomorphisms of tensor powers", lambda: check_commutant(logger, settings.COMMUTANT_MAX_DEGREE)),
        ("Fusion ring properties", lambda: check_fusion(logger, settings.RANDOM_SEED)),
        ("Integrals and the splitting criterion", lambda: check_hopf(logger, data_dir)),
        ("Hom dimensions out of the regular comodule", lambda: check_hom(logger, data_dir)),
    ]
    failed = []
    for i, (title, step) in enumerate(steps, 1):
        logger.info(f"\n[{i}/{len(steps)}] {title}...")
        if step():
            logger.info("   ok")
        else:
            logger.error("   FAILED")
            failed.append(title)

    log_section(f"CHECK RUN COMPLETED: {datetime.now()}, {len(steps) - len(failed)}/{len(steps)} steps passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
