from .elaborate import Environment, elaborate
from .parser import Document, parse, print_document
from .report import Report, aggregate_json

__all__ = ["Document", "Environment", "Report", "aggregate_json", "elaborate",
           "parse", "print_document"]
