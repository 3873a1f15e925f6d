"""Expression language and command line interface."""
from fintop.cli.evaluate import EvalError, evaluate
from fintop.cli.main import build_parser, main
from fintop.cli.parser import ExprSyntaxError, parse, parse_list, to_source
