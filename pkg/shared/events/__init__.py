from shared.events.event_types import EventType
from shared.events.event_bus import EventBus

__all__ = ["EventType", "EventBus"]
