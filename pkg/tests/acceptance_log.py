"""Shared record of acceptance outcomes, printed at the end of the session."""
LINES: list[str] = []
