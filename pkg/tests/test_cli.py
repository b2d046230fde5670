import json

import pytest

from main_analyze import analyze_http, build_analysis
from main_audit import audit_http
from semigraph_cli import main
from shared.config import EXIT_COUNTEREXAMPLES, EXIT_INPUT_ERROR, EXIT_OK, EXIT_RESOURCE_CAP
from shared.semigroup_core import monogenic


class FakeRequest:
    def __init__(self, payload):
        self.payload = payload

    def get_json(self, silent=False):
        return self.payload


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_monogenic(self, capsys):
        code, out, _ = run(capsys, 'analyze', '--gen', 'monogenic:2,3')
        assert code == EXIT_OK
        assert 'complete: true' in out
        assert 'delta: 3' in out
        assert 'alpha: 1' in out
        assert 'pi(S): [1, 3, 4]' in out
        assert 'chi: 4' in out

    def test_klein_group_is_a_star(self, capsys):
        _, out, _ = run(capsys, 'analyze', '--gen', 'elementary_abelian_2:2')
        assert 'star K_{1,3}' in out
        assert 'tree: true' in out

    def test_left_zero_is_null(self, capsys):
        _, out, _ = run(capsys, 'analyze', '--gen', 'left_zero:3')
        assert 'null graph' in out
        assert 'components: 3' in out

    def test_example_reports_witness(self, capsys):
        _, out, _ = run(capsys, 'analyze', '--gen', 'example_315')
        assert 'planar: false' in out
        assert 'witness: K3,3' in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, 'analyze', '--gen', 'cyclic_group:3', '--json')
        assert code == EXIT_OK
        report = json.loads(out)
        assert report['epg']['complete'] is True
        assert report['order'] == 3

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / 'c2.txt'
        path.write_text("2\n0 1\n1 0\n")
        code, out, _ = run(capsys, 'analyze', str(path))
        assert code == EXIT_OK
        assert 'order: 2' in out

    def test_non_associative_file(self, capsys, non_associative_file):
        code, _, err = run(capsys, 'analyze', str(non_associative_file))
        assert code == EXIT_INPUT_ERROR
        assert '(0, 0, 1)' in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, 'analyze', str(tmp_path / 'absent.txt'))
        assert code == EXIT_INPUT_ERROR

    def test_no_input(self, capsys):
        code, _, _ = run(capsys, 'analyze')
        assert code == EXIT_INPUT_ERROR

    @pytest.mark.parametrize('spec', ['direct_product:2,2', 'adjoin_identity:3'])
    def test_table_constructors_reject_numbers(self, capsys, spec):
        code, _, err = run(capsys, 'analyze', '--gen', spec)
        assert code == EXIT_INPUT_ERROR
        assert '^1' in err

    def test_binary_file(self, capsys, tmp_path):
        path = tmp_path / 'garbage.txt'
        path.write_bytes(b'2\n0 1\n\xff\xfe\n')
        code, _, err = run(capsys, 'analyze', str(path))
        assert code == EXIT_INPUT_ERROR
        assert 'UTF-8' in err

    @pytest.mark.parametrize('record', ['{"table": 5}', '{"table": 5, "n": 1}', '{"table": [5]}'])
    def test_malformed_json_table(self, capsys, tmp_path, record):
        path = tmp_path / 'bad.json'
        path.write_text(record)
        code, _, _ = run(capsys, 'analyze', str(path))
        assert code == EXIT_INPUT_ERROR


class TestEnumerate:
    @pytest.mark.parametrize('argv, expected', [
        (['enumerate', '3', '--dedup', 'iso-anti'], '18'),
        (['enumerate', '1'], '1'),
        (['enumerate', '2', '--dedup', 'labeled'], '8'),
        (['enumerate', '3', '--dedup', 'iso', '--jobs', '2'], '24'),
    ])
    def test_counts(self, capsys, argv, expected):
        code, out, _ = run(capsys, *argv)
        assert code == EXIT_OK
        assert out.strip() == expected

    def test_emit(self, capsys, tmp_path):
        out_dir = tmp_path / 'tables'
        code, _, _ = run(capsys, 'enumerate', '2', '--emit', str(out_dir))
        assert code == EXIT_OK
        assert len(list(out_dir.glob('*.txt'))) == 4

    def test_order_cap(self, capsys):
        code, _, err = run(capsys, 'enumerate', '7')
        assert code == EXIT_RESOURCE_CAP
        assert 'cap' in err


class TestAudit:
    def test_order_one(self, capsys):
        code, out, _ = run(capsys, 'audit', '1')
        assert code == EXIT_OK
        assert 'Total counterexamples: 0' in out

    def test_order_three(self, capsys, tmp_path):
        records = tmp_path / 'audit.ndjson'
        code, out, _ = run(capsys, 'audit', '3', '--records', str(records))
        assert code == EXIT_OK
        assert '16 theorems, 19 checks' in out
        assert 'corpus=18' in out
        assert records.read_text() == ''

    def test_up_to_covers_every_smaller_order(self, capsys):
        code, out, _ = run(capsys, 'audit', '3', '--up-to', '--checks', 'T-complete-monogenic')
        assert code == EXIT_OK
        assert 'corpus=23' in out

    def test_default_is_the_single_order(self, capsys):
        _, out, _ = run(capsys, 'audit', '3', '--checks', 'T-complete-monogenic')
        assert 'corpus=18' in out
        assert 'corpus=23' not in out

    @pytest.mark.slow
    def test_planarity_on_order_four(self, capsys):
        code, out, _ = run(capsys, 'audit', '4', '--checks', 'T-planarity')
        assert code == EXIT_OK
        assert 'T-planarity' in out
        assert 'corpus=126' in out

    def test_order_cap(self, capsys):
        code, _, _ = run(capsys, 'audit', '6')
        assert code == EXIT_RESOURCE_CAP

    def test_unknown_check(self, capsys):
        code, _, _ = run(capsys, 'audit', '2', '--checks', 'T-nonexistent')
        assert code == EXIT_INPUT_ERROR

    def test_counterexample_exit_code(self, capsys, monkeypatch):
        from shared.audit import Direction, TheoremCheck
        import main_audit

        def always_wrong(selectors):
            return [TheoremCheck('bogus', 1, 'never agrees', lambda s: True, lambda s: False, Direction.IFF)]

        monkeypatch.setattr(main_audit, 'select_checks', always_wrong)
        code, out, _ = run(capsys, 'audit', '1')
        assert code == EXIT_COUNTEREXAMPLES
        assert 'Total counterexamples: 1' in out


class TestExportDotAndGen:
    def test_monogenic_epg(self, capsys):
        code, out, _ = run(capsys, 'export-dot', '--gen', 'monogenic:2,3', '--graph', 'epg')
        assert code == EXIT_OK
        assert out.count('[label=') == 4
        assert out.count(' -- ') == 6

    def test_byte_identical_across_runs(self, capsys):
        _, first, _ = run(capsys, 'export-dot', '--gen', 'example_315', '--graph', 'commuting')
        _, second, _ = run(capsys, 'export-dot', '--gen', 'example_315', '--graph', 'commuting')
        assert first == second

    def test_gen_round_trips_through_analyze(self, capsys, tmp_path):
        _, out, _ = run(capsys, 'gen', 'monogenic:2,3')
        path = tmp_path / 'm23.txt'
        path.write_text(out)
        code, report, _ = run(capsys, 'analyze', str(path))
        assert code == EXIT_OK
        assert 'complete: true' in report

    def test_gen_json(self, capsys):
        _, out, _ = run(capsys, 'gen', 'left_zero:2', '--json')
        assert json.loads(out)['table'] == [[0, 0], [1, 1]]

    def test_gen_rejects_numeric_adjoin_identity(self, capsys):
        code, out, _ = run(capsys, 'gen', 'adjoin_identity:3')
        assert code == EXIT_INPUT_ERROR
        assert out == ''


class TestHttpEntryPoints:
    def test_analyze_http(self):
        body, status, _ = analyze_http(FakeRequest({'gen': 'monogenic:2,3'}))
        assert status == 200
        payload = json.loads(body)
        assert payload['status'] == 'success'
        assert payload['analysis'] == build_analysis(monogenic(2, 3))

    def test_analyze_http_table(self):
        body, status, _ = analyze_http(FakeRequest({'table': [[0, 1], [1, 0]], 'labels': ['e', 'g']}))
        assert status == 200
        assert json.loads(body)['analysis']['labels'] == ['e', 'g']

    def test_analyze_http_rejects_bad_table(self):
        body, status = analyze_http(FakeRequest({'table': [[1, 0], [0, 0]]}))
        assert status == 400
        assert json.loads(body)['status'] == 'error'

    def test_analyze_http_rejects_scalar_table(self):
        body, status = analyze_http(FakeRequest({'table': 5}))
        assert status == 400
        assert json.loads(body)['status'] == 'error'

    def test_analyze_http_empty_request(self):
        _, status = analyze_http(FakeRequest(None))
        assert status == 400

    def test_audit_http(self):
        body, status, _ = audit_http(FakeRequest({'n_max': 2}))
        assert status == 200
        payload = json.loads(body)
        assert payload['status'] == 'success'
        assert payload['total_counterexamples'] == 0
        assert payload['records'] == []

    def test_audit_http_cap(self):
        _, status = audit_http(FakeRequest({'n_max': 9}))
        assert status == 400
