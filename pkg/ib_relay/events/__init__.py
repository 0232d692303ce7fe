"""
事件系统模块
"""

from .event import Event, EventType
from .event_bus import EventBus, publish_if

__all__ = ['Event', 'EventType', 'EventBus', 'publish_if']
