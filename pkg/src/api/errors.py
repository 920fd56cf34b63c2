"""Translation of library errors into HTTP errors."""

from fastapi import HTTPException
from pydantic import ValidationError

from src.core.errors import CesaroInterpError, DivergenceError, DomainError, SolverError


def to_http(error: Exception) -> HTTPException:
    """400 for bad input, 422 for divergent norms, 500 for solver and other failures."""
    if isinstance(error, (DomainError, ValidationError)):
        return HTTPException(status_code=400, detail=str(error))
    if isinstance(error, DivergenceError):
        return HTTPException(status_code=422, detail=str(error))
    if isinstance(error, (SolverError, CesaroInterpError)):
        return HTTPException(status_code=500, detail=str(error))
    return HTTPException(status_code=500, detail=f"Internal server error: {error}")
