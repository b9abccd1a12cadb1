"""Raw Planetoid pickles to plain-text citation-network dataset directories."""
from .convert import Converted, ConvertError, assemble, convert, read_raw

__all__ = ["Converted", "ConvertError", "assemble", "convert", "read_raw"]

__version__ = "0.1.0"
