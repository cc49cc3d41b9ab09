# Copyright 2024 The selfdual Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

from . import cli


def run(capsys, *argv):
    code = cli.run(list(argv))
    return code, capsys.readouterr().out


def test_gray(capsys):
    assert run(capsys, 'gray', '--in', '(5B6)') == (0, '(121013)\n')


def test_unitary_count(capsys):
    assert run(capsys, 'unitary-count', '--ring', 'f4', '--n', '1') == (0, '9\n')


@pytest.mark.slow
def test_unitary_count_order_ten(capsys):
    assert run(capsys, 'unitary-count', '--ring', 'f4', '--n', '10') == \
        (0, '4320\n')


def test_verify_table_rows(capsys, tmp_path):
    html = str(tmp_path / 'report.html')
    code, out = run(capsys, 'verify-table', '--id', '26-1', '--rows', '1',
                    '--html', html)
    assert code == 0
    assert out.splitlines()[-1] == '26-1: 1/1 pass, d=8'
    assert '<table>' in open(html).read()


@pytest.mark.slow
def test_verify_building_up_row(capsys):
    code, out = run(capsys, 'verify-table', '--id', '26-2', '--rows', '1')
    assert code == 0
    assert out.splitlines()[-1] == '26-2: 1/1 pass, d=8, alpha=153'


def test_verify_unknown_table(capsys):
    assert run(capsys, 'verify-table', '--id', '99-9')[0] == 2


def test_check_params(capsys):
    code, out = run(capsys, 'check-params', '--construction', 'thm2',
                    '--lambda', '1', '--mu', '3',
                    '--blocks', '(3212220310),(2302200133)')
    assert code == 0
    assert out.splitlines() == ['conditions: pass', '[40, 20] self-dual: True']


def test_check_params_building_up(capsys):
    code, out = run(capsys, 'check-params', '--construction', 'building_up',
                    '--base', '26-1:9', '--epsilon', '1',
                    '--delta', '(100322012302332000223211)')
    assert code == 0
    assert out.splitlines() == ['conditions: pass', '[26, 13] self-dual: True']


def test_check_params_failure(capsys):
    code, out = run(capsys, 'check-params', '--construction', 'thm1',
                    '--a', '(000000)', '--b', '(000000)', '--c', '(311023)')
    assert code == 1
    assert out == 'conditions: fail\n'


def test_check_params_bad_lambda(capsys):
    code, _ = run(capsys, 'check-params', '--construction', 'thm2',
                  '--ring', 'f4u', '--lambda', '4', '--blocks', '(10)')
    assert code == 2


def test_mindist(capsys):
    assert run(capsys, 'mindist', '--code', '26-1:1') == (0, 'd=8\n')


def test_wdist(capsys, tmp_path):
    path = tmp_path / 'hexacode.txt'
    path.write_text('(100122)\n(010212)\n(001221)\n')
    code, out = run(capsys, 'wdist', '--generator', str(path))
    assert (code, out) == (0, '0:1 4:45 6:18\n')


def test_search_writes_records(capsys, tmp_path):
    out_path = tmp_path / 'found.txt'
    config = tmp_path / 'run.yaml'
    config.write_text('cache_dir: {}\nconstruction: thm2\nn: 3\nk: 2\n'
                      .format(tmp_path / 'cache'))
    code, out = run(capsys, 'search', '--config', str(config), '--seed', '3',
                    '--budget', '20000', '--max-records', '2',
                    '--out', str(out_path))
    assert code == 0
    assert len(out.splitlines()) == 2
    lines = out_path.read_text().splitlines()
    assert lines[0] == '# selfdual-records v1'
    assert sorted(lines[1:]) == sorted(out.splitlines())


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as ctx:
        cli.parse_args(['search', '--n', 'six'])
    assert ctx.value.code == 2
    assert cli.run([]) == 2
