import json
import os
from typing import Any, Dict, List, Tuple

import pandas as pd

from src.errors import SpecFileError
from src.logs import get_logger

logger = get_logger(__name__)


def save_sweep_results(records: List[Dict[str, Any]], summary: Dict[str, Any],
                       output_path: str = "results", indent: int = 2) -> Dict[str, str]:
    """Сохраняет результаты прогона: журнал в JSON и CSV, сводку в JSON"""
    os.makedirs(output_path, exist_ok=True)
    paths = {
        'log_json': os.path.join(output_path, "sweep_log.json"),
        'log_csv': os.path.join(output_path, "sweep_log.csv"),
        'summary': os.path.join(output_path, "sweep_summary.json"),
    }

    with open(paths['log_json'], 'w', encoding='utf-8') as f:
        json.dump(records, f, indent=indent, ensure_ascii=False)

    pd.DataFrame.from_records(records).to_csv(paths['log_csv'], index=False)

    with open(paths['summary'], 'w', encoding='utf-8') as f:
        json.dump(summary, f, indent=indent, ensure_ascii=False)

    logger.info(f"sweep results saved to {output_path}/")
    return paths


def load_sweep_results(output_path: str = "results") -> Tuple[pd.DataFrame, Dict[str, Any]]:
    """Загружает сохранённый журнал и сводку"""
    log_csv = os.path.join(output_path, "sweep_log.csv")
    summary_path = os.path.join(output_path, "sweep_summary.json")
    if not os.path.exists(log_csv) or not os.path.exists(summary_path):
        raise SpecFileError(f"no sweep results in {output_path}")

    log = pd.read_csv(log_csv)
    with open(summary_path, 'r', encoding='utf-8') as f:
        summary = json.load(f)

    logger.info(f"loaded {len(log)} sweep records from {output_path}")
    return log, summary
