from .system_file_reader import SystemFileReader
from .report_writer import ReportWriter
from .example_catalog import EXAMPLES, ExampleCase

__all__ = ['SystemFileReader', 'ReportWriter', 'EXAMPLES', 'ExampleCase']
