"""
OpenTelemetry setup for tracing workbench operations.

Operations open spans through `trace.get_tracer(...)` unconditionally; until a
provider is installed those spans are no-ops. The CLI installs a provider when
PSEUDOLINE_TRACING=true, optionally echoing finished spans to stderr.
"""

import sys
from typing import Optional

from opentelemetry import trace as trace_api
from opentelemetry.sdk import trace as trace_sdk
from opentelemetry.sdk.resources import SERVICE_NAME, Resource
from opentelemetry.sdk.trace.export import ConsoleSpanExporter, SimpleSpanProcessor, SpanExporter

from pseudoline_workbench.common.config import WorkbenchSettings, load_settings


def setup_tracing(
    service_name: str,
    console: bool = False,
    exporter: Optional[SpanExporter] = None,
) -> trace_sdk.TracerProvider:
    """
    Set up OpenTelemetry tracing for the workbench.

    Args:
        service_name: Name used for the service resource
        console: If True, print finished spans to stderr
        exporter: Extra exporter (tests pass an in-memory one)

    Returns:
        Configured tracer provider
    """
    # Create a resource naming the service
    resource = Resource.create({SERVICE_NAME: service_name})
    tracer_provider = trace_sdk.TracerProvider(resource=resource)

    # Echo finished spans to stderr so stdout keeps only the report
    if console:
        tracer_provider.add_span_processor(SimpleSpanProcessor(ConsoleSpanExporter(out=sys.stderr)))
        print(f"✅ Console tracing enabled for {service_name}", file=sys.stderr)

    # Attach the caller's exporter
    if exporter is not None:
        tracer_provider.add_span_processor(SimpleSpanProcessor(exporter))

    # Install as the global provider
    trace_api.set_tracer_provider(tracer_provider)
    return tracer_provider


def enable_tracing_for_command(
    command: str,
    settings: Optional[WorkbenchSettings] = None,
) -> Optional[trace_sdk.TracerProvider]:
    """
    Enable tracing for one CLI verb when the settings ask for it.

    Args:
        command: The CLI verb (e.g. "scan", "check")
        settings: Settings to consult (loaded from the environment if omitted)

    Returns:
        The tracer provider, or None when tracing is off
    """
    # Load settings from the environment if not passed
    settings = settings or load_settings()
    if not settings.tracing:
        return None
    return setup_tracing(f"pseudoline-workbench-{command}", console=settings.trace_console)
