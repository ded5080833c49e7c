"""Friezes with coefficients as subpolygons of Conway-Coxeter friezes."""

from .core import (Frieze, PatternWindow, ValidationReport, is_conway_coxeter,
                   make_frieze, pattern_rows, restrict, scale, tame_check,
                   triangle_frieze, verify_ptolemy)
from .criterion import (CriterionReport, check_gcd_condition,
                        check_triangle_criterion, check_valuation_condition,
                        is_embeddable, pm_divisibility)
from .extender import (DefaultPolicy, Embedding, ExplicitPolicy,
                       ExtensionChoice, ExtensionTrace, PrimeLocal,
                       admissible_choices, embed, enumerate_embeddings,
                       extend_step, make_choice)
from .oracle import cross_validate, occurs_in_cc
from .triangulation import (Triangulation, enumerate_triangulations, fan,
                            frieze_of, quiddity, triangulation_of)

__version__ = "0.1.0"
