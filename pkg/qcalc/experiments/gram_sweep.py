"""
Computes the Gram matrix of the invariant forms in the representation of the Haar state for a grid of
the scale parameters alpha and beta.

For every pair the diagonal of the computed Gram matrix is compared with the closed form values
alpha^2 q^4 (1-q^2)^2, beta^2 (1-q^2)^2 and alpha^2 (1-q^2)^2, and the largest off diagonal entry is
recorded. The results are saved as a JSON file into the experiment folder.
"""
import os
import typing as t

import orjson
import numpy as np
from pycomex.experiment import Experiment
from pycomex.util import Skippable

from qcalc.oprep.regular import regular_rep, gram_matrix, expected_gram_diagonal

SHORT_DESCRIPTION = 'Compares the Gram matrix of the invariant forms with its closed form'

# == SWEEP PARAMETERS ==
Q_VALUE: str = '1/2'
ALPHAS: t.List[float] = [0.5, 1.0, 2.0]
BETAS: t.List[float] = [0.5, 1.0, 2.0]
N_MAX: int = 40
K_MIN: int = -6
K_MAX: int = 6

# == EXPERIMENT PARAMETERS ==
DEBUG = True
BASE_PATH = os.getcwd()
NAMESPACE = 'results/gram_sweep'
with Skippable(), (e := Experiment(base_path=BASE_PATH, namespace=NAMESPACE, glob=globals())):
    e.info('starting gram sweep...')

    rows = []
    for alpha in ALPHAS:
        for beta in BETAS:
            reg = regular_rep(Q_VALUE, N_MAX, K_MIN, K_MAX, l_max=N_MAX, alpha=alpha, beta=beta)
            gram = gram_matrix(reg)
            diagonal = np.real(np.diag(gram))
            expected = expected_gram_diagonal(reg.rep.q, alpha, beta)
            rows.append({
                'alpha': alpha,
                'beta': beta,
                'diagonal': diagonal.tolist(),
                'expected': expected.tolist(),
                'max_deviation': float(np.max(np.abs(diagonal - expected))),
                'max_off_diagonal': float(np.max(np.abs(gram - np.diag(np.diag(gram))))),
            })
            e.info(f' * alpha={alpha}, beta={beta}: deviation {rows[-1]["max_deviation"]:.2e}, '
                   f'off diagonal {rows[-1]["max_off_diagonal"]:.2e}')

    e['gram'] = rows
    results_path = os.path.join(e.path, 'gram.json')
    with open(results_path, mode='wb') as file:
        file.write(orjson.dumps(rows, option=orjson.OPT_INDENT_2))

    e.info(f'saved the gram matrices to {results_path}')
