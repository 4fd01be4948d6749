"""Benchmark rows persisted in a SQL database (SQLite by default)."""

from __future__ import annotations

from collections.abc import Iterable
from datetime import datetime, timezone

from sqlalchemy import DateTime, Engine, Integer, String, create_engine, select
from sqlalchemy.orm import DeclarativeBase, Mapped, Session, mapped_column

from guillotine_layout.report._bench import BenchRow, _format_bound, _parse_bound

__all__ = ["BenchRecord", "BenchStore"]


class _Base(DeclarativeBase):
    pass


class BenchRecord(_Base):
    """One stored ``BenchRow`` under a run label."""

    __tablename__ = "bench_rows"

    id: Mapped[int] = mapped_column(Integer, primary_key=True)
    run_label: Mapped[str] = mapped_column(String(100), index=True)
    position: Mapped[int] = mapped_column(Integer)
    recorded_at: Mapped[datetime] = mapped_column(DateTime(timezone=True))
    name: Mapped[str] = mapped_column(String(200))
    n: Mapped[int] = mapped_column(Integer)
    solver: Mapped[str] = mapped_column(String(50))
    nodes: Mapped[int] = mapped_column(Integer)
    time_s: Mapped[str] = mapped_column(String(40))
    # bounds are stored in their CSV spelling so rationals stay exact
    lb: Mapped[str] = mapped_column(String(200), default="")
    ub: Mapped[str] = mapped_column(String(200), default="")
    iters: Mapped[int | None] = mapped_column(Integer, nullable=True)
    status: Mapped[str] = mapped_column(String(20))

    def to_row(self) -> BenchRow:
        return BenchRow(
            name=self.name,
            n=self.n,
            solver=self.solver,
            nodes=self.nodes,
            time_s=float(self.time_s),
            lb=_parse_bound(self.lb),
            ub=_parse_bound(self.ub),
            iters=self.iters,
            status=self.status,
        )


class BenchStore:
    """Save and reload benchmark rows keyed by a run label.

    Example::

        store = BenchStore("sqlite:///bench.db")
        store.save_rows("nightly", rows)
        assert store.load_rows("nightly") == rows
    """

    def __init__(self, url: str | Engine = "sqlite://") -> None:
        self._engine = create_engine(url) if isinstance(url, str) else url
        _Base.metadata.create_all(self._engine)

    @property
    def engine(self) -> Engine:
        return self._engine

    def save_rows(self, run_label: str, rows: Iterable[BenchRow]) -> int:
        """Append *rows* under *run_label*; returns how many were written."""
        now = datetime.now(timezone.utc)
        with Session(self._engine) as session:
            offset = len(
                session.scalars(
                    select(BenchRecord.id).where(BenchRecord.run_label == run_label)
                ).all()
            )
            records = [
                BenchRecord(
                    run_label=run_label,
                    position=offset + i,
                    recorded_at=now,
                    name=row.name,
                    n=row.n,
                    solver=row.solver,
                    nodes=row.nodes,
                    time_s=repr(row.time_s),
                    lb=_format_bound(row.lb),
                    ub=_format_bound(row.ub),
                    iters=row.iters,
                    status=row.status,
                )
                for i, row in enumerate(rows)
            ]
            session.add_all(records)
            session.commit()
            return len(records)

    def load_rows(self, run_label: str) -> list[BenchRow]:
        """Rows of *run_label* in the order they were saved."""
        with Session(self._engine) as session:
            stmt = (
                select(BenchRecord)
                .where(BenchRecord.run_label == run_label)
                .order_by(BenchRecord.position)
            )
            return [record.to_row() for record in session.scalars(stmt)]

    def run_labels(self) -> list[str]:
        """Distinct run labels, sorted."""
        with Session(self._engine) as session:
            stmt = select(BenchRecord.run_label).distinct().order_by(BenchRecord.run_label)
            return list(session.scalars(stmt))
