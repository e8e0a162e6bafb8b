import logging

import numpy as np
import pytest

from jcells.core import basis
from jcells.core.errors import (ConfigError, NegativeRate, EmptyLattice, DampingLengthMismatch,
                                KappaOnSingleCell)
from jcells.core.linalg import HermitianMatrix, EigenSystem, group_degenerate, abs2
from jcells.core.params import make_params, validate, COMMON
from jcells.utils.exp import (load_config_file, load_run_config, dump_run_config, parse_value,
                              get_num_threads, THREADS_ENV)
from jcells.utils.log import TqdmToLogger, add_logging, remove_logging, logger
from jcells.utils.serialize import to_jsonable, write_json, write_csv, read_csv
from jcells.spectra.lines import SpectralLine


class TestValidate:
    def test_valid_two_cells(self):
        params = make_params(2, g=1.0, kappa=2.0, gamma_a=0.05, gamma_c=0.02)
        assert validate(params) is params

    def test_kappa_on_single_cell(self):
        with pytest.raises(KappaOnSingleCell):
            validate(make_params(1, kappa=2.0))

    def test_damping_length_mismatch(self):
        with pytest.raises(DampingLengthMismatch):
            validate(make_params(2, gamma_a=[0.05], gamma_c=[0.02]))

    def test_mismatched_rate_lists(self):
        with pytest.raises(DampingLengthMismatch):
            make_params(2, gamma_a=[0.05, 0.05], gamma_c=[0.02])

    def test_empty_lattice(self):
        with pytest.raises(EmptyLattice):
            validate(make_params(0))

    @pytest.mark.parametrize('kwargs', [{'g': -1.0}, {'gamma_a': -0.1}, {'gamma_c': [0.1, -0.1]}])
    def test_negative_rates(self, kwargs):
        with pytest.raises(NegativeRate):
            validate(make_params(2, **kwargs))

    def test_unknown_reservoir(self):
        with pytest.raises(ConfigError):
            validate(make_params(2, reservoir='shared'))

    def test_config_errors_are_value_errors(self):
        assert issubclass(KappaOnSingleCell, ValueError)

    def test_params_are_immutable_values(self):
        params = make_params(3, delta=1.0, gamma_a=[0.1, 0.2, 0.3])
        moved = params.replace(delta=2.0)
        assert params.delta == 1.0 and moved.delta == 2.0
        assert params.ground_energy == pytest.approx(-1.5)
        assert params.max_cell_rate == pytest.approx(0.3)
        assert not params.identical_cells
        assert params.reservoir == COMMON


class TestBasis:
    @pytest.mark.parametrize('n_cells', [1, 2, 5])
    def test_bijection(self, n_cells):
        labels = basis.basis_labels(n_cells)
        assert len(labels) == 2 * n_cells
        for i, label in enumerate(labels):
            assert basis.index_of(label) == i
            assert basis.label_of(basis.index_of(label)) == label

    def test_ordering(self):
        labels = basis.basis_labels(2)
        assert [basis.label_name(x) for x in labels] == ['AtomExcited(0)', 'PhotonIn(0)',
                                                        'AtomExcited(1)', 'PhotonIn(1)']


class TestLinalg:
    def test_modulus_is_multiplicative(self, rng):
        z = rng.uniform(-1, 1, 500) + 1j * rng.uniform(-1, 1, 500)
        w = rng.uniform(-1, 1, 500) + 1j * rng.uniform(-1, 1, 500)
        assert np.allclose(abs2(z * w), abs2(z) * abs2(w), rtol=1e-14, atol=0)
        assert np.all(abs2(z) >= 0)

    def test_hermitian_by_construction(self):
        m = HermitianMatrix([[1 + 5j, 2 + 1j], [7.0, 3.0]])
        a = m.entries
        assert np.array_equal(a, a.conj().T)
        assert a[1, 0] == 2 - 1j
        assert a[0, 0] == 1.0
        with pytest.raises(ValueError):
            a[0, 0] = 2.0

    def test_permuted_keeps_spectrum(self, rng):
        m = HermitianMatrix(rng.normal(size=(4, 4)))
        p = m.permuted([2, 0, 3, 1])
        assert np.allclose(np.linalg.eigvalsh(m.entries), np.linalg.eigvalsh(p.entries))
        assert p.trace() == pytest.approx(m.trace())

    def test_group_degenerate(self):
        blocks = group_degenerate([-1.0, 1.0, 1.0 + 1e-12, 3.0])
        assert blocks == [[0], [1, 2], [3]]
        assert group_degenerate([2.0, 2.0]) == [[0, 1]]

    def test_eigensystem_reconstruct(self):
        v = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
        eig = EigenSystem([-1.0, 1.0], v, basis.basis_labels(1))
        assert np.allclose(eig.reconstruct(), [[0, -1], [-1, 0]])
        assert np.allclose(eig.projector([0, 1]), np.eye(2))


class TestRunConfig:
    def test_round_trip(self, tmp_path):
        cfg = {'subcommand': 'spectrum', 'cells': 2, 'delta': -2.0, 'g': 1.0, 'gamma': 0.1 + 0.2,
               'gamma_a': [0.01, 0.2], 'reservoir': 'independent', 'output': None, 'steps': 11}
        path = tmp_path / 'run.cfg'
        dump_run_config(cfg, path)
        assert load_run_config(path) == cfg

    def test_parse_value(self):
        assert parse_value('3') == 3
        assert parse_value('1e-3') == 1e-3
        assert parse_value('atomic') == 'atomic'
        assert parse_value('[1, 2.5]') == [1, 2.5]
        assert parse_value('null') is None

    def test_hyphenated_keys_and_comments(self, tmp_path):
        path = tmp_path / 'run.cfg'
        path.write_text('# two cells\ngamma-a = 0.05\ncells=2\n\n')
        assert load_run_config(path) == {'gamma_a': 0.05, 'cells': 2}

    def test_malformed_line(self, tmp_path):
        path = tmp_path / 'run.cfg'
        path.write_text('cells 2\n')
        with pytest.raises(ValueError):
            load_run_config(path)

    def test_subconfigs(self, tmp_path):
        path = tmp_path / 'config.yml'
        path.write_text('THREADS: 0\nSUBCONFIGS:\n  sweep:\n    THREADS: 4\n')
        assert load_config_file(path, subcommand='sweep') == {'THREADS': 4}
        assert load_config_file(path, subcommand='eigen', return_edict=True).THREADS == 0

    def test_thread_count(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, '3')
        assert get_num_threads() == 3
        monkeypatch.setenv(THREADS_ENV, '0')
        assert get_num_threads() >= 1
        monkeypatch.delenv(THREADS_ENV)
        assert get_num_threads(default=2) == 2


class TestSerialize:
    def test_jsonable(self):
        document = {'z': np.array([1 + 2j, 3.0]), 'n': np.int64(3), 'ok': np.bool_(True),
                    'line': SpectralLine(1.0, 0.5, 'a')}
        assert to_jsonable(document) == {'z': [[1.0, 2.0], [3.0, 0.0]], 'n': 3, 'ok': True,
                                         'line': {'bohr_frequency': 1.0, 'rate': 0.5, 'origin': 'a'}}

    def test_json_layout(self, tmp_path):
        path = write_json({'a': 1}, tmp_path / 'out.json')
        assert path.read_text() == '{\n  "schema_version": 1,\n  "a": 1\n}\n'

    def test_csv_round_trip(self, tmp_path):
        path = write_csv(tmp_path / 'out.csv', ['x', 'error'], [[0.1, None], [1.0, 'Bad: a, b']])
        header, rows = read_csv(path)
        assert header == ['x', 'error']
        assert rows == [['0.10000000000000001', ''], ['1', 'Bad: a, b']]
        assert float(rows[0][0]) == 0.1
        assert b'\r' not in path.read_bytes()


class TestLog:
    def test_tqdm_sink_logs_the_latest_bar(self, caplog):
        sink = TqdmToLogger(logger, min_interval=0.0)
        with caplog.at_level(logging.INFO):
            sink.write('\r verify:  10%')
            sink.write('\r verify:  20%\n')
            sink.flush()
            sink.flush()
        messages = [r.getMessage() for r in caplog.records if r.name == logger.name]
        assert messages == ['verify:  20%']

    def test_run_log_file(self, tmp_path):
        handler = add_logging(tmp_path / 'logs', prefix='eigen_')
        try:
            logger.info('written to the run log')
        finally:
            remove_logging(handler)
        log_files = list((tmp_path / 'logs').glob('eigen_*.log'))
        assert len(log_files) == 1
        assert '(INFO)' in log_files[0].read_text()
        assert handler not in logger.handlers
