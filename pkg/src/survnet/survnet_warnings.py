"""Warning categories raised by survnet."""

import warnings


class ConnectivityShortfallWarning(RuntimeWarning):
    """A construction cannot reach the connectivity it was asked for."""

    pass


class FractionalLinkCountWarning(RuntimeWarning):
    """A closed-form link count had to be rounded up to an integer."""

    pass


def warn_shortfall(requested, expected, method):
    warning_string = (
        "{0} topology: achieved connectivity {1} < requested {2}."
    ).format(method, expected, requested)
    warnings.warn(warning_string, ConnectivityShortfallWarning, stacklevel=3)
    return


warnings.simplefilter("always", ConnectivityShortfallWarning)
warnings.simplefilter("always", FractionalLinkCountWarning)
