class Verdict:
    """Outcome of a check: a boolean plus the data that certifies it."""

    def __init__(self, holds, payload=None, detail=""):
        self.holds = bool(holds)
        self.payload = payload if payload is not None else {}
        self.detail = detail

    def __bool__(self):
        return self.holds

    def __repr__(self):
        word = "holds" if self.holds else "fails"
        return f"<Verdict {word}{': ' + self.detail if self.detail else ''}>"
