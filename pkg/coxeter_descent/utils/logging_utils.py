import logging
import os
from pathlib import Path


def setup_logger(name: str) -> logging.Logger:
    base_dir = Path(__file__).resolve().parent.parent
    logs_dir = Path(os.getenv("COXETER_LOG_DIR", str(base_dir / "logs")))
    level_name = os.getenv("COXETER_LOG_LEVEL", "INFO").upper()
    level = getattr(logging, level_name, logging.INFO)

    logger = logging.getLogger(name)
    logger.setLevel(level)

    if not logger.handlers:
        formatter = logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        )

        console_handler = logging.StreamHandler()
        console_handler.setLevel(level)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        if os.getenv("COXETER_LOG_FILE", "1") == "1":
            logs_dir.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(logs_dir / "workflow.log", encoding="utf-8")
            file_handler.setLevel(level)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

    return logger
