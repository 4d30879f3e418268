from latmed import settings


class WorkersField:
    _workers = None

    @property
    def workers(self) -> int:
        if self._workers is None:
            return settings.worker_count()
        return self._workers

    @workers.setter
    def workers(self, value):
        self._workers = self._is_valid_int(value, "workers", 1, True)
