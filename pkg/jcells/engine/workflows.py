from collections import namedtuple

from jcells.core.basis import basis_labels, label_name
from jcells.core.errors import ConfigError, DegenerateAngle, DegenerateCell, InvalidManifold
from jcells.core.params import make_params, validate, INDEPENDENT
from jcells.model.lattice import numeric_eigensystem, closed_form_states
from jcells.model.limits import strong_coupling_limit_check
from jcells.model.rates import transition_rates, closed_form_rate, DARK, SUPERRADIANT
from jcells.model.single import doublet_lines
from jcells.solver.golden_rule import amplitude_rate
from jcells.solver.jacobi import SolverConfig
from jcells.solver.subspace import max_eigenspace_deviation, orthonormal_states
from jcells.spectra.lines import SpectralLine, frame_offset, frame_center, in_frame, drop_dark, lines_from_report
from jcells.spectra.peaks import find_peaks
from jcells.spectra.susceptibility import susceptibility, make_grid, default_grid
from jcells.spectra.witness import symmetry_witness
from jcells.utils.exp import get_num_threads
from jcells.utils.log import logger
from jcells.utils.serialize import SPECTRUM_HEADER

RunResult = namedtuple('RunResult', ['document', 'summary', 'table'])

RunTable = namedtuple('RunTable', ['header', 'rows'])


def parse_rates(value):
    """Per-cell rates from a scalar, a list or a comma separated string."""
    if isinstance(value, str):
        items = [x for x in value.replace('[', '').replace(']', '').split(',') if x.strip()]
        values = [float(x) for x in items]
        return values[0] if len(values) == 1 else values
    if isinstance(value, (list, tuple)):
        return [float(x) for x in value]
    return float(value)


def params_from_config(cfg):
    try:
        params = make_params(n_cells=int(cfg.cells), omega_c=float(cfg.omega_c), delta=float(cfg.delta),
                             g=float(cfg.g), kappa=float(cfg.kappa),
                             gamma_a=parse_rates(cfg.gamma_a), gamma_c=parse_rates(cfg.gamma_c),
                             reservoir=cfg.reservoir)
    except (TypeError, ValueError) as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(f'Invalid lattice parameters: {e}')
    return validate(params)


def params_document(params):
    return {
        'n_cells': params.n_cells,
        'omega_c': params.omega_c,
        'delta': params.delta,
        'g': params.g,
        'kappa': params.kappa,
        'gamma_a': params.gamma_a,
        'gamma_c': params.gamma_c,
        'reservoir': params.reservoir,
    }


def _settings(cfg, section):
    return cfg.get(section, dict())


def _closed_form_or_none(params):
    try:
        return closed_form_states(params)
    except (DegenerateAngle, DegenerateCell) as e:
        logger.warning(f'No closed-form eigenstates: {e}')
        return None


def run_eigen(cfg):
    params = params_from_config(cfg)
    eig = numeric_eigensystem(params, SolverConfig.from_config(cfg))
    states = _closed_form_or_none(params)

    document = {
        'params': params_document(params),
        'basis': [label_name(x) for x in basis_labels(params.n_cells)],
        'numeric': {
            'bohr_frequencies': eig.eigenvalues,
            'eigenvectors': [eig.vector(i) for i in range(eig.dim)],
        },
        'closed_form': None,
    }

    if states is not None:
        energy_deviation = max(abs(x.bohr_frequency - e) for x, e in zip(states, eig.eigenvalues))
        document['closed_form'] = {
            'states': [{'state_id': x.state_id, 'kind': x.kind, 'bohr_frequency': x.bohr_frequency,
                        'display_energy': x.display_energy, 'amplitudes': x.vector()} for x in states],
            'max_energy_deviation': energy_deviation,
            'max_subspace_deviation': max_eigenspace_deviation(states, eig),
        }

    levels = eig.eigenvalues + params.display_ground_energy - params.omega_c
    summary = {'bohr': eig.eigenvalues, 'level': levels}
    return RunResult(document=document, summary=summary, table=None)


def rate_report(params, cfg):
    states = _closed_form_or_none(params)
    if states is None:
        states = numeric_eigensystem(params, SolverConfig.from_config(cfg))
    return transition_rates(states, params, dark_threshold=cfg.DARK_THRESHOLD,
                            entanglement_tol=cfg.ENTANGLEMENT_TOL)


def run_rates(cfg):
    params = params_from_config(cfg)
    report = rate_report(params, cfg)
    numeric = transition_rates(numeric_eigensystem(params, SolverConfig.from_config(cfg)), params,
                               dark_threshold=cfg.DARK_THRESHOLD, entanglement_tol=cfg.ENTANGLEMENT_TOL)

    document = {'params': params_document(params)}
    document.update(report.to_dict())
    document['numeric_rates'] = numeric.rates

    if params.reservoir == INDEPENDENT and params.identical_cells and params.n_cells >= 2 and params.kappa > 0:
        limits = strong_coupling_limit_check(params, report)
        document['strong_coupling_limit'] = {'small_parameter': limits.small_parameter,
                                             'deviations': limits.deviations}

    summary = {
        'rate': report.rates,
        'dark': len(report.by_class(DARK)),
        'superradiant': len(report.by_class(SUPERRADIANT)),
    }
    return RunResult(document=document, summary=summary, table=None)


def spectral_lines(params, cfg, manifold=1):
    if params.n_cells == 1:
        damping = params.damping[0]
        return doublet_lines(manifold, params.omega_c, params.g, params.delta, damping)
    if manifold != 1:
        raise InvalidManifold(f'only the one-excitation manifold is available for {params.n_cells} cells')

    states = _closed_form_or_none(params)
    if states is None:
        return lines_from_report(rate_report(params, cfg))

    # pair-construction states of one degenerate block overlap, so their strengths do not add
    closed = {x.state_id: x for x in states}
    lines = []
    for origin, bohr, vector in orthonormal_states(states):
        if origin in closed:
            rate = closed_form_rate(closed[origin], params)
        else:
            rate = amplitude_rate(vector, params.gamma_a, params.gamma_c, params.reservoir)
        lines.append(SpectralLine(bohr, rate, origin))
    return lines


def run_spectrum(cfg):
    params = params_from_config(cfg)
    spectrum_cfg = _settings(cfg, 'SPECTRUM')
    frame = cfg.get('frame') or spectrum_cfg.get('FRAME', 'atomic')
    gamma = float(cfg.gamma if cfg.get('gamma') is not None else spectrum_cfg.get('PROBE_WIDTH', 0.01))
    points = int(cfg.get('points') or spectrum_cfg.get('POINTS', 4001))
    manifold = int(cfg.get('manifold') or 1)

    offset = frame_offset(params, frame, manifold)
    center = frame_center(params, frame, manifold)
    all_lines = spectral_lines(params, cfg, manifold)
    lines = drop_dark(in_frame(all_lines, offset), cfg.DARK_THRESHOLD * params.max_cell_rate)
    logger.info(f'{len(lines)} of {len(all_lines)} lines above the dark threshold')

    if cfg.get('wmin') is not None and cfg.get('wmax') is not None:
        grid = make_grid(float(cfg.wmin), float(cfg.wmax), points)
    else:
        grid = default_grid(lines, gamma, center, points=points,
                            margin_widths=float(spectrum_cfg.get('MARGIN_WIDTHS', 10.0)))

    samples = susceptibility(lines, gamma, grid, threads=get_num_threads(cfg.get('THREADS', 0)))
    peaks = find_peaks(samples)
    witness = symmetry_witness(peaks, center, gamma) if peaks else None
    if witness is None:
        logger.warning('Spectrum has no interior peaks; symmetry witness undefined')

    table = RunTable(header=SPECTRUM_HEADER,
                     rows=[(params.omega_c - w, v) for w, v in zip(samples.grid, samples.values)])
    document = {
        'params': params_document(params),
        'frame': frame,
        'center': center,
        'probe_width': gamma,
        'lines': [{'origin': x.origin, 'position': x.bohr_frequency, 'rate': x.rate} for x in lines],
        'peaks': [{'position': p.position, 'omega_c_minus_omega_p': params.omega_c - p.position,
                   'height': p.height} for p in peaks],
        'symmetry_witness': witness,
    }
    summary = {'witness': witness, 'n_peaks': len(peaks)}
    return RunResult(document=document, summary=summary, table=table)

WORKFLOWS = {
    'eigen': run_eigen,
    'rates': run_rates,
    'spectrum': run_spectrum,
}


def get_workflow(name):
    if name not in WORKFLOWS:
        raise ConfigError(f'Unknown workflow "{name}", expected one of {sorted(WORKFLOWS)}')
    return WORKFLOWS[name]
