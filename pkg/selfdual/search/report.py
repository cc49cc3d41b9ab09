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

"""HTML reports of table verification runs."""

import logging

import yattag

css = """
table {
    text-align: center;
    border-collapse: collapse;
}

td, th {
    border: 1px dotted grey;
    padding: 2px 8px;
}

td.fail {
    color: red;
}

.unbreakable {
    page-break-inside: avoid;
}
"""

HEADINGS = ['row', 'result', 'self-dual', 'd', 'claimed d', 'alpha',
            'claimed alpha', 'A(w+2) check', 'note']


def _cell(value):
    return '-' if value is None else str(value)


def ydump_report(doc, report):
    doc, tag, text, line = doc.ttl()
    with tag('div', klass='unbreakable'):
        line('h2', '{}: {}'.format(report.table_id, report.info['title']))
        line('p', report.summary())
        with tag('table'):
            with tag('tr'):
                for h in HEADINGS:
                    line('th', h)
            for r in report.results:
                with tag('tr'):
                    line('td', str(r.row))
                    line('td', 'pass' if r.passed else 'FAIL',
                         klass='pass' if r.passed else 'fail')
                    for value in (r.self_dual, r.min_distance,
                                  r.expected_distance, r.alpha,
                                  r.expected_alpha, r.second_ok):
                        line('td', _cell(value))
                    line('td', r.message)


def dump_html(path, reports):
    doc = yattag.Doc()
    with doc.tag('style', type='text/css'):
        doc.asis(css)
    for report in reports:
        logging.info('Dumping table %s', report.table_id)
        ydump_report(doc, report)
        doc.stag('hr')
    with open(path, 'w') as f:
        logging.info('Writing report to %s', path)
        f.write(yattag.indent(doc.getvalue(), indent_text=True))
