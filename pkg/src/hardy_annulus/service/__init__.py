"""HTTP service layer: pydantic schemas, handlers, FastAPI app."""

from .handlers import HANDLERS
from .schemas import ComplexValue

__all__ = ["HANDLERS", "ComplexValue"]
