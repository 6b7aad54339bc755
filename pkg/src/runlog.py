"""
Run Log

Timestamped event log for validation runs and CLI invocations, written
as one JSON document per run under outputs/logs/.
"""
import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional

from config import Paths


class RunLog:
    """
    Collects events during a run and saves them to JSON.

    Each event is {timestamp, event, details}; `failures` counts events
    recorded with ok=False.
    """

    def __init__(self, name: str, log_file: Optional[Path] = None):
        self.name = name
        self.log_file = Path(log_file) if log_file else Path(Paths.logs) / f"{name}.json"
        self.started = datetime.now().isoformat()
        self.events = []
        self.failures = 0

    def record(self, event: str, ok: bool = True, **details: Any) -> Dict:
        entry = {
            "timestamp": datetime.now().isoformat(),
            "event": event,
            "ok": ok,
            "details": details,
        }
        self.events.append(entry)
        if not ok:
            self.failures += 1
        return entry

    def get_summary(self) -> Dict:
        by_event = {}
        for entry in self.events:
            by_event[entry["event"]] = by_event.get(entry["event"], 0) + 1
        return {"total": len(self.events), "failures": self.failures, "by_event": by_event}

    def save_log(self) -> Path:
        """Save the event log to its JSON file"""
        self.log_file.parent.mkdir(parents=True, exist_ok=True)
        log = {
            "run": self.name,
            "started": self.started,
            "finished": datetime.now().isoformat(),
            "summary": self.get_summary(),
            "events": self.events,
        }
        self.log_file.write_text(json.dumps(log, indent=2, default=str))
        return self.log_file
