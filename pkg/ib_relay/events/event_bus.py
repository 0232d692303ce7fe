"""
事件总线模块
"""

import threading
import traceback
from typing import Callable, Dict, List
from .event import Event, EventType
from ..utils.logger import get_logger
from ..utils.exceptions import EventHandlerError

logger = get_logger(__name__)


class EventBus:
    """事件总线 - 扫描与校验进度的发布和订阅"""

    def __init__(self):
        self._subscribers: Dict[EventType, List[Callable[[Event], None]]] = {}
        # 扫描点在工作线程中求值，发布需串行
        self._lock = threading.RLock()

    def subscribe(self, event_type: EventType, callback: Callable[[Event], None]):
        """
        订阅事件

        Args:
            event_type: 要订阅的事件类型
            callback: 事件处理回调函数
        """
        with self._lock:
            callbacks = self._subscribers.setdefault(event_type, [])
            if callback not in callbacks:
                callbacks.append(callback)

    def unsubscribe(self, event_type: EventType, callback: Callable[[Event], None]):
        """取消订阅；未订阅时忽略"""
        with self._lock:
            callbacks = self._subscribers.get(event_type, [])
            if callback in callbacks:
                callbacks.remove(callback)

    def publish(self, event: Event):
        """
        发布事件

        Args:
            event: 要发布的事件

        Raises:
            EventHandlerError: 回调抛出异常
        """
        with self._lock:
            # 副本，避免回调中修改订阅列表
            callbacks = list(self._subscribers.get(event.type, []))
            for callback in callbacks:
                try:
                    callback(event)
                except Exception as e:
                    name = getattr(callback, "__name__", repr(callback))
                    error_msg = f"事件处理错误: {name} -> {e}"
                    logger.error(error_msg)
                    logger.debug(traceback.format_exc())
                    raise EventHandlerError(error_msg, event_type=event.type.value) from e

    def get_subscriber_count(self, event_type: EventType) -> int:
        """指定事件类型的订阅者数量"""
        return len(self._subscribers.get(event_type, []))

    def clear_subscribers(self, event_type: EventType = None):
        """
        清除订阅者

        Args:
            event_type: 指定的事件类型，为 None 时清除所有
        """
        with self._lock:
            if event_type is None:
                self._subscribers.clear()
            elif event_type in self._subscribers:
                self._subscribers[event_type].clear()


def publish_if(bus, event_type: EventType, **data) -> None:
    """bus 为 None 时不发布"""
    if bus is not None:
        bus.publish(Event(event_type, data))
