from qcalc.config import Config
from qcalc.suq2 import parse_element, render_element
from qcalc.fodc import make_calculus, differential, omega_gamma
from qcalc.report import emit_report
from qcalc.oprep.lattice import LatticeWindow
from qcalc.oprep.builders import RepConfig, build_rep, build_F, standard_spec
from qcalc.oprep.checks import verify_omega_vanishing

# The config file only provides the defaults, such as the value of q and the size of the lattice window.
config = Config()
config.load()

# Algebra elements are parsed from text and are always kept in the normal form of the PBW basis. The
# coefficients are exact rational functions of q.
x = parse_element('a*d - q*b*c')
print('normal form of ad - qbc:', render_element(x))

# The differential of the 3D calculus is computed symbolically in the left normal form sum_j x_j * w_j
calc = make_calculus('3D')
print('d(a) =', differential(parse_element('a'), calc))
print('omega(a^2) =', omega_gamma(parse_element('a^2'), calc))

# The commutator representation is built on a finite window of the lattice e_{nk}. All numeric checks
# only evaluate the interior columns of that window.
n_max, k_min, k_max = config.get_window()
window = LatticeWindow(n_max=n_max, k_min=k_min, k_max=k_max, q_value=config.get_q_value())
rep = build_rep(RepConfig(window=window))
F = build_F(rep, standard_spec())

# The operators Omega(g) of the elements g of the right ideal of the 3D calculus vanish
records = verify_omega_vanishing(rep, F, calc, config.get_tolerance())
print(emit_report(records, 'text'))
