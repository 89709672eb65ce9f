"""全局常量定义：退出码、定理名称、图族名称、默认参数等"""

from fractions import Fraction

# 命令行退出码
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_CAP = 3

# 默认 --jobs 的环境变量
JOBS_ENV_VAR = "SPECTRAL_SPLIT_JOBS"

# 谱计算默认值
DEFAULT_ENCLOSURE_WIDTH = Fraction(1, 10**9)
DEFAULT_MAX_ITERATIONS = 10**6
DEFAULT_EXACT_SIZE_CAP = 16
DEFAULT_POSITIVITY_FLOOR = 1e-12
DEFAULT_WITNESS_ESCALATIONS = 3

# 每次检查收敛前连续做的矩阵-向量乘法次数
ITERATION_BLOCK = 16
# 浮点迭代的精度极限，低于此宽度改用整数精确迭代
FLOAT_WIDTH_FLOOR = Fraction(1, 10**13)
# 有理化向量的定点位数
RATIONAL_BITS = 60
# 尝试把浮点向量取整为小分母有理数时的分母上限
SNAP_DENOMINATOR = 1000

# 穷举枚举上限
EXHAUSTIVE_MAX_N = 7

# 图族名称
FAMILY_PATH = "Path"
FAMILY_CYCLE = "Cycle"
FAMILY_STAR = "Star"
FAMILY_COMPLETE = "Complete"
FAMILY_TILDE_D = "TildeD"
FAMILY_NONE = "None"

# 命令行 family 子命令的名称映射
FAMILY_CLI_NAMES = {
    "path": FAMILY_PATH,
    "cycle": FAMILY_CYCLE,
    "star": FAMILY_STAR,
    "complete": FAMILY_COMPLETE,
    "tilde-d": FAMILY_TILDE_D,
}

# 谱半径比较结果
LESS = "Less"
EQUAL = "Equal"
GREATER = "Greater"

# 比较证书类型
CERT_ENCLOSURES = "disjoint enclosures"
CERT_STURM = "exact root isolation"
CERT_GCD = "common-factor equality"

# 验证任务（定理）名称
THEOREM_SUBDIVISION = "subdivision"
THEOREM_SPLIT_ADJACENT = "split_adjacent"
THEOREM_SPLIT_NONADJACENT = "split_nonadjacent"
THEOREM_EXPAND = "expand"
THEOREM_LEMMA_DEG4 = "lemma_deg4"
THEOREM_PF_MONOTONE = "pf_monotone"

ALL_THEOREMS = (
    THEOREM_SUBDIVISION,
    THEOREM_SPLIT_ADJACENT,
    THEOREM_SPLIT_NONADJACENT,
    THEOREM_EXPAND,
    THEOREM_LEMMA_DEG4,
    THEOREM_PF_MONOTONE,
)

# 精确模式
EXACT_ALWAYS = "always"
EXACT_ON_OVERLAP = "on_overlap"

# 实例分类
OUTCOME_STRICT = "strict-decrease"
OUTCOME_EXCEPTION = "equality-at-exception"
OUTCOME_VIOLATION = "VIOLATION"

# 非相邻分裂的证明路径
ROUTE_INTERNAL_PATH = "internal_path"
ROUTE_PENDENT_PATH = "pendent_path"
ROUTE_CYCLE = "cycle"
ROUTE_DISCONNECTED = "disconnected"
ROUTE_CONNECTED = "connected"
ROUTE_DOMINATION = "adjacent_split_domination"

# 见证向量情形 2/3 的严格不等式来源
SUBCASE_NEIGHBOUR_DEGREE = "neighbour_degree"
SUBCASE_MANY_LEAVES = "many_leaves"
SUBCASE_TWO_LEAVES = "two_leaves"

# 报告格式版本
REPORT_SCHEMA_VERSION = 1
