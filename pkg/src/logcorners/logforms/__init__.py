"""Log functions, log forms, the differential, wedge and pullback."""
from .logfunction import LogFunction, log_of
from .logform import LogForm, as_form, d, wedge
from .pullback import pullback

__all__ = ["LogFunction", "LogForm", "log_of", "as_form", "d", "wedge", "pullback"]
