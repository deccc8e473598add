"""
Measures the growth of the commutator operators of the standard example for several values of q.

For every q the operator Omega(b) and the commutator d(b) are computed on windows with decreasing lower k
bounds and the largest interior column norms are fitted against k_min. The fitted growth ratios are
expected to approach q^-1 for Omega(b) and q^-2 for d(b), while the bounded control (T = identity, R = 0)
does not grow at all. The results are saved as a JSON file into the experiment folder.
"""
import os
import typing as t

import orjson
from pycomex.experiment import Experiment
from pycomex.util import Skippable

from qcalc.qscalar import check_q_value
from qcalc.oprep.probes import growth_probe, bounded_control_spec

SHORT_DESCRIPTION = 'Measures the growth ratios of Omega(b) and d(b) for several q'

# == SWEEP PARAMETERS ==
Q_VALUES: t.List[str] = ['1/3', '1/2', '2/3', '3/4']
K_MIN_SEQUENCE: t.List[int] = list(range(-6, -17, -1))
N_MAX: int = 10
K_MAX: int = 4

# == EXPERIMENT PARAMETERS ==
DEBUG = True
BASE_PATH = os.getcwd()
NAMESPACE = 'results/growth_sweep'
with Skippable(), (e := Experiment(base_path=BASE_PATH, namespace=NAMESPACE, glob=globals())):
    e.info('starting growth sweep...')
    growth: t.Dict[str, dict] = {}

    for q_value in Q_VALUES:
        q = float(check_q_value(q_value))
        e.info(f'q = {q_value}')

        result = growth_probe(q_value, K_MIN_SEQUENCE, n_max=N_MAX, k_max=K_MAX)
        control = growth_probe(q_value, K_MIN_SEQUENCE, n_max=N_MAX, k_max=K_MAX,
                               spec=bounded_control_spec(), validate=False)

        growth[q_value] = {
            'omega_sups': result.omega_sups.tolist(),
            'commutator_sups': result.commutator_sups.tolist(),
            'fitted_ratio': result.fitted_ratio,
            'commutator_ratio': result.commutator_ratio,
            'control_ratio': control.fitted_ratio,
        }

        e.info(f' * Omega(b) ratio {result.fitted_ratio:.5f} vs q^-1 = {1 / q:.5f}')
        e.info(f' * d(b) ratio {result.commutator_ratio:.5f} vs q^-2 = {1 / q ** 2:.5f}')
        e.info(f' * control ratio {control.fitted_ratio:.5f}')

    e['growth'] = growth
    results_path = os.path.join(e.path, 'growth.json')
    with open(results_path, mode='wb') as file:
        file.write(orjson.dumps(growth, option=orjson.OPT_INDENT_2))

    e.info(f'saved the growth ratios to {results_path}')
