from .runconfig import RunConfig, SCENARIOS, parse_config, parse_material, load_document
from .runner import main, run, build_parser, write_rows

__all__ = ["RunConfig", "SCENARIOS", "parse_config", "parse_material", "load_document", "main", "run",
           "build_parser", "write_rows"]
