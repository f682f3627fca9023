import os
from dotenv import load_dotenv

load_dotenv()

class Config:
    # 随机求值点配置
    SEED = int(os.getenv('BB_SEED', '20240601'))
    EVAL_BOUND = int(os.getenv('BB_EVAL_BOUND', '9'))
    if EVAL_BOUND < 2:
        raise ValueError("BB_EVAL_BOUND 必须不小于2")

    # 重写引擎配置
    STEP_CAP = int(os.getenv('BB_STEP_CAP', '1000000'))
    if STEP_CAP < 1:
        raise ValueError("BB_STEP_CAP 必须为正整数")
    MODE = os.getenv('BB_MODE', 'symbolic')
    if MODE not in ('symbolic', 'numeric'):
        raise ValueError("BB_MODE 只能是 symbolic 或 numeric")

    # 张量表示配置 (N = 2m+1)
    TENSOR_N = int(os.getenv('BB_TENSOR_N', '3'))
    if TENSOR_N < 3 or TENSOR_N % 2 == 0:
        raise ValueError("BB_TENSOR_N 必须是不小于3的奇数")
    NUMERIC_TRIALS = 3

    # 文件路径配置
    OUTPUT_DIR = os.getenv('BB_OUTPUT_DIR', './output')
    LOG_DIR = os.getenv('BB_LOG_DIR', './logs')

    # 批量验证配置
    MAX_WORKERS = int(os.getenv('BB_MAX_WORKERS', '4'))
    DEFAULT_FORMAT = 'text'
