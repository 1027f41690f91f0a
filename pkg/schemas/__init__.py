from schemas.run_schemas import (
    GraphStats,
    OracleResult,
    RunConfig,
    RunSummary,
    min_large_size,
)

__all__ = ["GraphStats", "OracleResult", "RunConfig", "RunSummary", "min_large_size"]
