from traces.exceptions import FormatError


class PrincipleError(Exception):
    pass


class PrinciplesFormatError(FormatError):
    pass


class ExplanationFormatError(FormatError):
    pass


class UnknownInstanceError(Exception):
    pass


class BackgroundPremiseError(Exception):
    def __init__(self, premise):
        super().__init__(f"{premise.label} ({premise.value})")
        self.premise = premise
