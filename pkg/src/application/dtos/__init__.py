from .search_config import SearchConfig
from .system_file import SystemFile
from .report import Report, ReportMapper

__all__ = ['SearchConfig', 'SystemFile', 'Report', 'ReportMapper']
