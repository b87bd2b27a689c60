import os
import sys
from pathlib import Path

# keep test runs from writing logs/workflow.log
os.environ.setdefault("COXETER_LOG_FILE", "0")
os.environ.setdefault("COXETER_LOG_LEVEL", "WARNING")

sys.path.insert(0, str(Path(__file__).resolve().parent))
