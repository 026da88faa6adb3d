"""Exception hierarchy shared by every module."""


class RecRelError(Exception):
    """Base class for domain errors; the CLI maps these to exit code 1."""


class ParseError(RecRelError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
