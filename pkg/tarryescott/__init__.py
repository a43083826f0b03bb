"""Exact tools to build, verify and reduce Tarry-Escott solutions"""

from tarryescott.core import MultigradeSolution as MultigradeSolution
from tarryescott.core import classify_symmetry as classify_symmetry
from tarryescott.core import equivalent as equivalent
from tarryescott.core import format_solution as format_solution
from tarryescott.core import frolov_transform as frolov_transform
from tarryescott.core import parse_solution as parse_solution
from tarryescott.core import reduce as reduce
from tarryescott.core import verify_degree as verify_degree

from tarryescott.shift import shift_chain as shift_chain
from tarryescott.shift import tarry_shift as tarry_shift

from tarryescott.progression import APBlock as APBlock
from tarryescott.progression import assemble as assemble
from tarryescott.progression import closed_power_sum as closed_power_sum

from tarryescott.families import FamilyId as FamilyId
from tarryescott.families import generate as generate
from tarryescott.families import gloden_augment as gloden_augment

from tarryescott.elliptic import multiple as multiple
from tarryescott.elliptic import point_to_deg5 as point_to_deg5
from tarryescott.elliptic import point_to_deg7 as point_to_deg7
from tarryescott.elliptic import weierstrass_to_quartic as weierstrass_to_quartic

from tarryescott.fermat import QuarticForm as QuarticForm
from tarryescott.fermat import fermat_ascent as fermat_ascent

from tarryescott.poly import MultiPoly as MultiPoly
from tarryescott.poly import verify_identity_family as verify_identity_family

from tarryescott.search import brute_force_ideal as brute_force_ideal
