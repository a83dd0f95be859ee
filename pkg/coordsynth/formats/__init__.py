from .automaton_file import (
    content_lines,
    parse_automaton,
    read_automaton,
    read_composed,
    save_automaton,
    write_automaton,
)
from .problem_file import load_problem, parse_problem
from .report import Report, emit_report, parse_report

__all__ = (
    "content_lines",
    "parse_automaton",
    "read_automaton",
    "read_composed",
    "save_automaton",
    "write_automaton",
    "load_problem",
    "parse_problem",
    "Report",
    "emit_report",
    "parse_report",
)
