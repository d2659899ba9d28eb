"""MCP server exposing the identity suite, spectrum and field tools"""

from typing import List

import mcp.server.stdio
import mcp.types as types
from mcp.server import NotificationOptions, Server
from mcp.server.models import InitializationOptions

from neutrino_sta.commands import (
    FieldSampleConfig, SpinorCheckConfig, cmd_field_sample, cmd_spectrum, cmd_spinor_check,
)
from neutrino_sta.config.run_config import RunConfig
from neutrino_sta.config.settings import Settings
from neutrino_sta.reports.writer import ReportWriter
from neutrino_sta.utils.logging_config import get_logger
from neutrino_sta.verification.suite import cmd_verify

logger = get_logger(__name__)


class NeutrinoStaMCPServer:
    """MCP Server for spacetime-algebra identity checks and the neutrino spectrum"""

    def __init__(self, output_dir: str = None):
        self.server = Server(Settings.SERVER_NAME)
        self.writer = ReportWriter(output_dir)

        self._register_handlers()

    def _register_handlers(self):
        """Register MCP server handlers"""

        @self.server.list_tools()
        async def handle_list_tools() -> List[types.Tool]:
            """List available tools"""
            return [
                types.Tool(
                    name="verify_identities",
                    description="Run the identity suite and save JSON and Excel reports",
                    inputSchema={
                        "type": "object",
                        "properties": {
                            "config_path": {
                                "type": "string",
                                "description": "Path to a RunConfig JSON file (optional)"
                            },
                            "tolerance_abs": {
                                "type": "number",
                                "description": "Absolute tolerance override (optional)"
                            },
                            "seed": {
                                "type": "integer",
                                "description": "Random seed for property checks (optional)"
                            }
                        }
                    }
                ),
                types.Tool(
                    name="compute_spectrum",
                    description="Compute the quantized neutrino masses, fitting m to a sum bound unless m is given",
                    inputSchema={
                        "type": "object",
                        "properties": {
                            "N": {"type": "number", "description": "Upper quantum number N"},
                            "sum_bound": {"type": "number", "description": "Bound on the mass sum in eV"},
                            "m_param": {"type": "number", "description": "Mass parameter m in eV"},
                            "n_set": {
                                "type": "array",
                                "items": {"type": "integer"},
                                "description": "Quantum numbers n of the states"
                            }
                        }
                    }
                ),
                types.Tool(
                    name="sample_field",
                    description="Sample a constructed field on a grid and write CSV plus JSON sidecar",
                    inputSchema={
                        "type": "object",
                        "properties": {
                            "config_path": {"type": "string", "description": "Path to a field sample config"},
                            "name": {"type": "string", "description": "Base name of the output files"}
                        },
                        "required": ["config_path"]
                    }
                ),
                types.Tool(
                    name="check_spinor",
                    description="Residuals of a plane-wave spinor in its Dirac and Klein-Gordon equations",
                    inputSchema={
                        "type": "object",
                        "properties": {
                            "branch": {"type": "string", "enum": ["bradyonic", "tachyonic"]},
                            "omega": {"type": "number"},
                            "k": {"type": "number"},
                            "m": {"type": "number"}
                        },
                        "required": ["branch", "omega", "k", "m"]
                    }
                ),
                types.Tool(
                    name="get_report_summary",
                    description="Count checks by status in a saved suite workbook",
                    inputSchema={
                        "type": "object",
                        "properties": {
                            "workbook": {
                                "type": "string",
                                "description": "Workbook file name in the output directory (optional)"
                            }
                        }
                    }
                )
            ]

        @self.server.call_tool()
        async def handle_call_tool(name: str, arguments: dict) -> List[types.TextContent]:
            """Handle tool calls"""
            arguments = arguments or {}

            if name == "verify_identities":
                return await self._handle_verify(arguments)
            elif name == "compute_spectrum":
                return await self._handle_spectrum(arguments)
            elif name == "sample_field":
                return await self._handle_sample_field(arguments)
            elif name == "check_spinor":
                return await self._handle_check_spinor(arguments)
            elif name == "get_report_summary":
                return await self._handle_get_summary(arguments)
            else:
                return [types.TextContent(
                    type="text",
                    text=f"Unknown tool: {name}"
                )]

    async def _handle_verify(self, arguments: dict) -> List[types.TextContent]:
        """Handle verify identities tool call"""
        try:
            config = RunConfig.load(
                arguments.get("config_path"),
                tolerance_abs=arguments.get("tolerance_abs"),
                seed=arguments.get("seed"),
                output_dir=str(self.writer.output_dir),
            )
            report = cmd_verify(config)
            self.writer.write_json(Settings.SUITE_REPORT_NAME, report)
            self.writer.write_workbook(Settings.SUITE_WORKBOOK_NAME, suite=report)
            return [types.TextContent(type="text", text=self._generate_suite_summary(report))]

        except Exception as e:
            logger.error(f"Error in verify_identities: {e}")
            return [types.TextContent(
                type="text",
                text=f"Error running identity suite: {str(e)}"
            )]

    async def _handle_spectrum(self, arguments: dict) -> List[types.TextContent]:
        """Handle compute spectrum tool call"""
        try:
            spectrum = cmd_spectrum(
                N=arguments.get("N", Settings.DEFAULT_N),
                sum_bound=arguments.get("sum_bound"),
                m_param=arguments.get("m_param"),
                n_set=arguments.get("n_set"),
            )
            return [types.TextContent(type="text", text=spectrum.model_dump_json(indent=2))]

        except Exception as e:
            logger.error(f"Error in compute_spectrum: {e}")
            return [types.TextContent(
                type="text",
                text=f"Error computing spectrum: {str(e)}"
            )]

    async def _handle_sample_field(self, arguments: dict) -> List[types.TextContent]:
        """Handle sample field tool call"""
        try:
            config = FieldSampleConfig.load(arguments["config_path"])
            result = cmd_field_sample(config, self.writer, arguments.get("name", "field"))
            return [types.TextContent(
                type="text",
                text=f"Sampled {result.field_name} at {result.samples} points.\n\nData saved to: {result.csv_path}"
            )]

        except Exception as e:
            logger.error(f"Error in sample_field: {e}")
            return [types.TextContent(
                type="text",
                text=f"Error sampling field: {str(e)}"
            )]

    async def _handle_check_spinor(self, arguments: dict) -> List[types.TextContent]:
        """Handle check spinor tool call"""
        try:
            result = cmd_spinor_check(SpinorCheckConfig(**arguments))
            return [types.TextContent(type="text", text=result.model_dump_json(indent=2, by_alias=True))]

        except Exception as e:
            logger.error(f"Error in check_spinor: {e}")
            return [types.TextContent(
                type="text",
                text=f"Error checking spinor: {str(e)}"
            )]

    async def _handle_get_summary(self, arguments: dict) -> List[types.TextContent]:
        """Handle get report summary tool call"""
        try:
            summary_data = self.writer.workbook_summary(arguments.get("workbook", Settings.SUITE_WORKBOOK_NAME))

            if "error" in summary_data:
                return [types.TextContent(
                    type="text",
                    text=summary_data["error"]
                )]

            summary = self._generate_summary_text(summary_data)
            return [types.TextContent(type="text", text=summary)]

        except Exception as e:
            logger.error(f"Error in get_report_summary: {e}")
            return [types.TextContent(
                type="text",
                text=f"Error reading workbook: {str(e)}"
            )]

    def _generate_suite_summary(self, report) -> str:
        """Generate summary text for a suite run"""
        failures = report.failures()
        summary = f"Ran {len(report.checks)} identity checks: "
        summary += "all as expected.\n" if report.all_passed else f"{len(failures)} not as expected.\n"
        for check in failures:
            summary += f"• {check.group}/{check.name}: {check.status} (expected {check.expected_status})\n"

        summary += f"\nReports saved to: {self.writer.output_dir}"
        return summary

    def _generate_summary_text(self, summary_data: dict) -> str:
        """Generate summary text from summary data"""
        total = summary_data["total_checks"]
        status_counts = summary_data["status_counts"]

        summary = f"Check Summary (Total: {total}):\n\n"
        for status, count in status_counts.items():
            percentage = (count / total) * 100 if total else 0.0
            summary += f"• {status.title()}: {count} ({percentage:.1f}%)\n"

        return summary

    async def run(self):
        """Run the MCP server"""
        async with mcp.server.stdio.stdio_server() as (read_stream, write_stream):
            await self.server.run(
                read_stream,
                write_stream,
                InitializationOptions(
                    server_name=Settings.SERVER_NAME,
                    server_version=Settings.SERVER_VERSION,
                    capabilities=self.server.get_capabilities(
                        notification_options=NotificationOptions(),
                        experimental_capabilities={},
                    ),
                ),
            )


def create_server(output_dir: str = None) -> NeutrinoStaMCPServer:
    """Create and return a new MCP server instance"""
    return NeutrinoStaMCPServer(output_dir)
