from logging import getLogger

sweep_logger = getLogger("SweepLogger")


class EventHook(object):
    """
    Event handling class.
    Handlers are called in registration order. A handler raising an exception is logged and skipped, the remaining
    handlers and the caller keep running.
    """

    def __init__(self, name=None):
        """
        :param name: event name used in log messages
        """
        self.name = name or "event"
        self._handlers = []

    def __iadd__(self, handler):
        self._handlers.append(handler)
        return self

    def __isub__(self, handler):
        self._handlers.remove(handler)
        return self

    def __len__(self):
        return len(self._handlers)

    def fire(self, *args, **keywargs):
        """
        Call every handler with the given arguments.
        :return: number of handlers which finished without an exception
        """
        done = 0
        for handler in list(self._handlers):
            try:
                handler(*args, **keywargs)
                done += 1
            except Exception:
                sweep_logger.exception("handler %r of %s failed", handler, self.name)
        return done
