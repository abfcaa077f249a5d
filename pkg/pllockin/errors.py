class PllockinError(Exception):
    pass

class ParameterError(PllockinError, ValueError):
    """Invalid parameter value. `name` is the offending parameter (or CLI flag)."""

    def __init__(self, name, message):
        super(ParameterError, self).__init__("{}: {}".format(name, message))
        self.name    = name
        self.message = message

class DomainError(PllockinError, ValueError):
    pass

class IntegrationError(PllockinError, ArithmeticError):
    pass

class TracingError(PllockinError, ArithmeticError):
    pass

class TableLookupError(PllockinError, LookupError):
    pass
