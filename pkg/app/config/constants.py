# Exit Codes
EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2
EXIT_AXIOM = 3
EXIT_PRECISION = 4

# Subcommands
CMD_EXPONENTS = 'exponents'
CMD_FACTOR = 'factor'
CMD_LIMIT_HINGE = 'limit-hinge'
CMD_LIMIT_GLUED = 'limit-glued'
CMD_HINGE_CHECK = 'hinge-check'
CMD_HINGE_MUL = 'hinge-mul'
CMD_LAMBDA = 'lambda'
CMD_REP = 'rep'
CMD_REP_LIMIT = 'rep-limit'
CMD_URCHIN = 'urchin'
CMD_PROJECT = 'project'
CMD_SEPARATE = 'separate'
CMD_SELFTEST = 'selftest'

ALL_COMMANDS = [
    CMD_EXPONENTS, CMD_FACTOR, CMD_LIMIT_HINGE, CMD_LIMIT_GLUED,
    CMD_HINGE_CHECK, CMD_HINGE_MUL, CMD_LAMBDA, CMD_REP, CMD_REP_LIMIT,
    CMD_URCHIN, CMD_PROJECT, CMD_SEPARATE, CMD_SELFTEST,
]

# Hinge axioms
AXIOM_KER_DOM = '(2.1)'
AXIOM_IM_INDEF = '(2.2)'
AXIOM_DOM_FIRST = '(2.3)'
AXIOM_IM_LAST = '(2.4)'
AXIOM_RANK = '(2.5)'
AXIOM_DIMENSION = 'dim'
AXIOM_LENGTH = 'length'

AXIOM_DESCRIPTIONS = {
    AXIOM_KER_DOM: 'Ker P_j = Dom P_{j+1}',
    AXIOM_IM_INDEF: 'Im P_j = Indef P_{j+1}',
    AXIOM_DOM_FIRST: 'Dom P_1 = V',
    AXIOM_IM_LAST: 'Im P_k = V',
    AXIOM_RANK: 'rk P_j > 0',
    AXIOM_DIMENSION: 'dim P_j = n',
    AXIOM_LENGTH: '1 <= k <= n',
}

# Urchin point kinds
POINT_INTERIOR = 'interior'
POINT_SPIKE = 'spike'

# Reparametrization kinds
REPARAM_FORMAL = 'formal'
REPARAM_POWER = 'power'
REPARAM_SCALAR = 'scalar'
REPARAM_KINDS = (REPARAM_FORMAL, REPARAM_POWER, REPARAM_SCALAR)

# Extra jet terms kept on top of the derived precision
PRECISION_MARGIN = 1

# Text report headers
REPORT_EXPONENTS_HEADER = "EXPONENTS of a {n}x{n} family"
REPORT_FACTOR_HEADER = "FACTORIZATION a(z) diag(z^-m) b(z), precision {precision}"
REPORT_HINGE_HEADER = "HINGE n={n}, orbit {alpha}"
REPORT_GLUED_HEADER = "GLUED FAMILY n={n}"
REPORT_LAMBDA_HEADER = "EXTERIOR OPERATOR degree {k_in} -> {k_out}"
REPORT_REP_HEADER = "REPRESENTATION nu={signature}, dim H={dim}"
REPORT_URCHIN_HEADER = "URCHIN POINT ({kind})"
REPORT_PROJECT_HEADER = "PROJECTION to [GL_{n}]_zeta, zeta = {signatures}"
REPORT_SEPARATE_HEADER = "SEPARATION over {count} compactification(s)"
REPORT_SELFTEST_HEADER = "SELFTEST seed={seed}, samples={samples}"
