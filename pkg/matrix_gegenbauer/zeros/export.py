# path: matrix_gegenbauer/zeros/export.py

import csv
import io
import json
import os
from typing import Any, Dict, List, Sequence

import structlog

from matrix_gegenbauer.models import ZeroReport
from matrix_gegenbauer.polynomials.kernel import format_rational

logger = structlog.get_logger()

CSV_COLUMNS = ['two_ell', 'nu', 'n', 'i', 'j', 'echelon', 're', 'im', 'residual', 'converged']

VIEW = 600
EXTENT = 1.1


def _number(value: float) -> str:
    return f"{value:.17g}"


def csv_rows(reports: Sequence[ZeroReport]) -> List[Dict[str, Any]]:
    """One row per root; a report without roots but with a failure still gets a row."""
    rows = []
    for report in reports:
        base = {'two_ell': report.two_ell, 'nu': format_rational(report.nu), 'n': report.n, 'i': report.entry[0],
                'j': report.entry[1], 'echelon': report.echelon, 'converged': str(report.converged).lower()}
        if not report.roots and not report.converged:
            rows.append({**base, 're': '', 'im': '', 'residual': ''})
        for root in report.roots:
            rows.append({**base, 're': _number(root.re), 'im': _number(root.im), 'residual': _number(root.residual)})
    return rows


def render_csv(reports: Sequence[ZeroReport]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator='\r\n')
    writer.writeheader()
    writer.writerows(csv_rows(reports))
    return buffer.getvalue()


def _to_view(value: float) -> float:
    return (value + EXTENT) / (2 * EXTENT) * VIEW


def render_svg(report: ZeroReport) -> str:
    """
    Scatter of the roots of one report on [-1.1, 1.1]^2 with the real axis and the interval [-1, 1] drawn.
    """
    axis = _to_view(0.0)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {VIEW} {VIEW}" '
        f'width="{VIEW}" height="{VIEW}">',
        f'<title>entry ({report.entry[0]}, {report.entry[1]}), n={report.n}, nu={format_rational(report.nu)}, '
        f'2l={report.two_ell}</title>',
        f'<line x1="0" y1="{axis:.3f}" x2="{VIEW}" y2="{axis:.3f}" stroke="black" stroke-width="1"/>',
        f'<line x1="{_to_view(-1.0):.3f}" y1="{axis:.3f}" x2="{_to_view(1.0):.3f}" y2="{axis:.3f}" '
        f'stroke="gray" stroke-width="3"/>',
    ]
    for root in report.roots:
        if abs(root.re) > EXTENT or abs(root.im) > EXTENT:
            continue
        # screen y grows downward
        lines.append(f'<circle cx="{_to_view(root.re):.3f}" cy="{VIEW - _to_view(root.im):.3f}" r="3" fill="blue"/>')
    lines.append('</svg>')
    return '\n'.join(lines) + '\n'


def reports_to_json(reports: Sequence[ZeroReport]) -> str:
    records = []
    for report in reports:
        record = report.model_dump(mode='python')
        record['nu'] = format_rational(report.nu)
        record['entry'] = list(report.entry)
        records.append(record)
    return json.dumps(records, indent=2, sort_keys=True)


def write_survey(reports: Sequence[ZeroReport], output_dir: str, stem: str, svg: bool = True) -> List[str]:
    """
    Write the CSV (and one SVG per report) under output_dir.

    :param reports: (Sequence[ZeroReport]) Reports in output order.
    :param output_dir: (str) Target directory, created if missing.
    :param stem: (str) File name prefix.
    :param svg: (bool) Also write the scatter plots.
    :return: (List[str]) Paths written.
    """
    os.makedirs(output_dir, exist_ok=True)
    csv_path = os.path.join(output_dir, f"{stem}.csv")
    with open(csv_path, 'w', encoding='utf-8', newline='') as handle:
        handle.write(render_csv(reports))
    paths = [csv_path]
    if svg:
        for report in reports:
            if not report.roots:
                continue
            path = os.path.join(output_dir, f"{stem}_n{report.n}_{report.entry[0]}_{report.entry[1]}.svg")
            with open(path, 'w', encoding='utf-8') as handle:
                handle.write(render_svg(report))
            paths.append(path)
    logger.info("Wrote survey files", files=len(paths), output_dir=output_dir)
    return paths
