# psigroup/harness/tables.py
"""
ψ(G) versus ψ(C_n) tables for a corpus, written as CSV or JSON.
"""
import logging
from pathlib import Path
from typing import Union

import pandas as pd

from psigroup.harness.corpus import Corpus
from psigroup.models.schemas import TableFormat, TableSummary

logger = logging.getLogger(__name__)

COLUMNS = ["label", "order", "cyclic", "psi", "psi_cn", "ratio_num", "ratio_den", "solvable"]


def corpus_frame(corpus: Corpus) -> pd.DataFrame:
    """One row per entry, sorted by (order, label); ratios stay as two integer columns."""
    rows = []
    for entry in corpus:
        report = entry.psi_report
        rows.append(
            {
                "label": entry.label,
                "order": report.n,
                "cyclic": report.cyclic,
                "psi": report.psi,
                "psi_cn": report.psi_cn,
                "ratio_num": report.ratio_num,
                "ratio_den": report.ratio_den,
                "solvable": entry.structure.solvable,
            }
        )
    frame = pd.DataFrame(rows, columns=COLUMNS)
    if frame.empty:
        return frame
    return frame.sort_values(["order", "label"], kind="stable").reset_index(drop=True)


def emit_table(
    corpus: Corpus,
    format: Union[TableFormat, str] = TableFormat.CSV,
    destination: Union[str, Path] = "psi_table.csv",
) -> TableSummary:
    """
    Write the corpus table to ``destination``.

    An empty corpus gives a header-only CSV or an empty JSON array.
    """
    table_format = TableFormat(format)
    path = Path(destination)
    frame = corpus_frame(corpus)

    if table_format == TableFormat.CSV:
        frame.to_csv(path, index=False, lineterminator="\n")
    else:
        if frame.empty:
            path.write_text("[]\n", encoding="utf-8")
        else:
            frame.to_json(path, orient="records", indent=2)

    logger.info(f"Wrote {len(frame)} rows to {path} as {table_format.value}")
    return TableSummary(path=str(path), format=table_format, rows=len(frame))
