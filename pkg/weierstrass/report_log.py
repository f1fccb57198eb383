"""Report log with pandas-backed CSV persistence."""

import os
from typing import Iterable, List

import pandas as pd

from weierstrass.exceptions import ReportLogError
from weierstrass.records import ReportRecord


class ReportLog:
    """Bounded, ordered collection of report records."""

    def __init__(self, max_size: int = 1000):
        self._records: List[ReportRecord] = []
        self._max_size = max_size

    def _trim(self):
        if len(self._records) > self._max_size:
            self._records = self._records[-self._max_size:]

    def add_record(self, record: ReportRecord):
        self._records.append(record)
        self._trim()

    def extend(self, records: Iterable[ReportRecord]):
        self._records.extend(records)
        self._trim()

    def get_records(self) -> List[ReportRecord]:
        return self._records.copy()

    def clear(self):
        self._records.clear()

    def get_last_record(self) -> ReportRecord:
        """
        Raises:
            ReportLogError: If the log is empty.
        """
        if not self._records:
            raise ReportLogError("Report log is empty")
        return self._records[-1]

    @property
    def failures(self) -> int:
        return sum(r.failures for r in self._records)

    def to_dataframe(self) -> pd.DataFrame:
        """All records as a DataFrame with ReportRecord.COLUMNS."""
        return pd.DataFrame([r.to_dict() for r in self._records], columns=ReportRecord.COLUMNS)

    def save_to_csv(self, file_path: str, encoding: str = "utf-8"):
        """
        Write every record to CSV; an empty log writes the header only.

        Raises:
            ReportLogError: If writing fails.
        """
        try:
            directory = os.path.dirname(file_path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            self.to_dataframe().to_csv(file_path, index=False, encoding=encoding)
        except OSError as e:
            raise ReportLogError(f"Failed to save reports to CSV: {e}")

    def load_from_csv(self, file_path: str, encoding: str = "utf-8"):
        """
        Replace the log with the records of a CSV file.

        Raises:
            ReportLogError: If the file is missing or malformed.
        """
        if not os.path.exists(file_path):
            raise ReportLogError(f"Report file not found: {file_path}")
        try:
            df = pd.read_csv(file_path, encoding=encoding)
        except pd.errors.EmptyDataError:
            self._records.clear()
            return
        except (OSError, pd.errors.ParserError) as e:
            raise ReportLogError(f"Failed to read reports from CSV: {e}")
        try:
            records = [ReportRecord.from_dict(row.to_dict()) for _, row in df.iterrows()]
        except (KeyError, ValueError, TypeError) as e:
            raise ReportLogError(f"Failed to load reports from CSV: {e}")
        self._records = records
        self._trim()

    def __len__(self) -> int:
        return len(self._records)

    def __str__(self) -> str:
        if not self._records:
            return "No reports recorded"
        lines = ["Verification reports:"]
        lines.extend(f"{i}. {r}" for i, r in enumerate(self._records, 1))
        return "\n".join(lines)
