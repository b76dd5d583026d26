"""
Timing and resource monitoring for Coulomb Kit computations
"""
import functools
import logging
import os
import threading
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import psutil


logger = logging.getLogger(__name__)

# Monopole sums and property suites slower than this get a warning
SLOW_OPERATION_SECONDS = 30.0


@dataclass
class PerformanceMetric:
    """A single timed operation"""
    name: str
    start_time: float
    end_time: Optional[float] = None
    duration: Optional[float] = None
    success: bool = True
    error: Optional[str] = None
    memory_mb: Optional[float] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    def complete(self, success: bool = True, error: Optional[str] = None):
        """Mark this metric as complete"""
        self.end_time = time.perf_counter()
        self.duration = self.end_time - self.start_time
        self.success = success
        self.error = error


class PerformanceMonitor:
    """Records wall-clock time and resident memory of named operations"""

    def __init__(self):
        self.metrics: List[PerformanceMetric] = []
        self._lock = threading.Lock()
        self._process = psutil.Process(os.getpid())

    @contextmanager
    def measure(self, name: str, **metadata):
        """Context manager to measure execution time"""
        metric = PerformanceMetric(
            name=name,
            start_time=time.perf_counter(),
            metadata=metadata
        )

        try:
            yield metric
            metric.complete(success=True)
        except Exception as e:
            metric.complete(success=False, error=str(e))
            raise
        finally:
            metric.memory_mb = self._memory_mb()
            with self._lock:
                self.metrics.append(metric)

            if metric.duration and metric.duration > SLOW_OPERATION_SECONDS:
                logger.warning(f"Slow operation: {name} took {metric.duration:.2f}s")

    def measure_function(self, func: Optional[Callable] = None, name: Optional[str] = None):
        """Decorator to measure function execution time"""
        def decorator(f):
            metric_name = name or f"{f.__module__}.{f.__name__}"

            @functools.wraps(f)
            def wrapper(*args, **kwargs):
                with self.measure(metric_name):
                    return f(*args, **kwargs)

            return wrapper

        if func:
            return decorator(func)
        return decorator

    def _memory_mb(self) -> Optional[float]:
        try:
            return self._process.memory_info().rss / (1024 * 1024)
        except psutil.Error as e:
            logger.debug(f"Error reading memory usage: {e}")
            return None

    def last_duration(self, name: str) -> Optional[float]:
        """Duration of the most recent completed operation with this name"""
        with self._lock:
            for metric in reversed(self.metrics):
                if metric.name == name and metric.duration is not None:
                    return metric.duration
        return None

    def get_performance_summary(self) -> Dict[str, Any]:
        """Get summary of performance metrics"""
        with self._lock:
            if not self.metrics:
                return {"message": "No metrics recorded"}

            metrics_by_name: Dict[str, List[PerformanceMetric]] = {}
            for metric in self.metrics:
                metrics_by_name.setdefault(metric.name, []).append(metric)

            summary = {}
            for name, metrics_list in metrics_by_name.items():
                durations = [m.duration for m in metrics_list if m.duration is not None]
                success_count = sum(1 for m in metrics_list if m.success)
                memory = [m.memory_mb for m in metrics_list if m.memory_mb is not None]

                if durations:
                    summary[name] = {
                        'count': len(metrics_list),
                        'success_count': success_count,
                        'error_count': len(metrics_list) - success_count,
                        'avg_duration': sum(durations) / len(durations),
                        'max_duration': max(durations),
                        'total_duration': sum(durations),
                        'max_memory_mb': max(memory) if memory else None,
                    }

            return summary

    def clear_metrics(self):
        """Clear all recorded metrics"""
        with self._lock:
            self.metrics.clear()

    def log_summary(self):
        """Log performance summary at debug level"""
        summary = self.get_performance_summary()

        if summary.get("message") == "No metrics recorded":
            return

        logger.debug("Performance Summary:")
        for name, stats in summary.items():
            logger.debug(f"  {name}:")
            logger.debug(f"    Count: {stats['count']} (Success: {stats['success_count']}, Errors: {stats['error_count']})")
            logger.debug(f"    Duration: avg={stats['avg_duration']:.3f}s, max={stats['max_duration']:.3f}s")
            if stats['max_memory_mb'] is not None:
                logger.debug(f"    Memory: max={stats['max_memory_mb']:.1f}MB")


# Global performance monitor instance
monitor = PerformanceMonitor()


def measure_performance(name: Optional[str] = None):
    """Decorator to measure function performance"""
    return monitor.measure_function(name=name)
