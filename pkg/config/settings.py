"""
Configurações principais do sistema
"""

import os
from pathlib import Path

# Diretório base do projeto
BASE_DIR = Path(__file__).parent.parent

_ENV_PREFIX = 'CUBDUAL_'


def _env(name: str, default: str) -> str:
    return os.getenv(f'{_ENV_PREFIX}{name}', default)


# Oráculo de pareamento por posto (força bruta)
ORACLE_CONFIG = {
    'max_cells': int(_env('ORACLE_MAX_CELLS', '512')),
    'enforce_guard': _env('ORACLE_ENFORCE', '1') != '0',
}

# Redução de matrizes de bordo
REDUCTION_CONFIG = {
    'default_method': _env('REDUCTION_METHOD', 'twist'),
    'supported_methods': ['standard', 'twist'],
}

# Configurações de verificação (comando verify)
VERIFY_CONFIG = {
    'default_dims': '4x4',
    'default_trials': 100,
    'default_seed': 1,
    'default_value_range': (0, 9),
    'n_jobs': int(_env('N_JOBS', '1')),
    # Limite do oráculo no verify: cobre T de 4x4x4 (729 células)
    'oracle_max_cells': int(_env('VERIFY_ORACLE_MAX_CELLS', '1024')),
    'random_matrix_max_size': 40,
    'random_matrix_density': 0.15,
    'counterexample_path': os.path.join(BASE_DIR, 'data', 'exports', 'counterexample.ndtext'),
}

# Transformações entre construções
TRANSFORM_CONFIG = {
    'min_padding_gap': 1.0,
    'alternative_gap': 1_000_000.0,
}

# Motor externo (protocolo CSV na saída padrão)
EXTERNAL_ENGINE_CONFIG = {
    'timeout_seconds': float(_env('ENGINE_TIMEOUT', '300')),
}

# Formatos de entrada e saída
OUTPUT_CONFIG = {
    'supported_input_formats': ['ndtext', 'pgm'],
    'supported_output_formats': ['csv', 'json'],
    'infinity_token': 'inf',
    'csv_header': ['dim', 'birth', 'death'],
}

# Códigos de saída da CLI
EXIT_CODES = {
    'ok': 0,
    'verification_failed': 1,
    'invalid_input': 2,
    'engine_failure': 3,
    'integrity_failure': 4,
}

# Configurações de logging
LOGGING_CONFIG = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'standard': {
            'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        },
    },
    'handlers': {
        'default': {
            'level': 'DEBUG',
            'formatter': 'standard',
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
        },
    },
    'loggers': {
        '': {
            'handlers': ['default'],
            'level': _env('LOG_LEVEL', 'WARNING').upper(),
            'propagate': False
        }
    }
}

LOG_FILE = _env('LOG_FILE', '')


def build_logging_config(level: str = None, log_file: str = None) -> dict:
    """
    Monta a configuração de logging para dictConfig

    Args:
        level: Nível do logger raiz (usa o do ambiente se None)
        log_file: Arquivo opcional para um handler adicional

    Returns:
        Dicionário pronto para logging.config.dictConfig
    """
    config = {
        **LOGGING_CONFIG,
        'handlers': dict(LOGGING_CONFIG['handlers']),
        'loggers': {'': dict(LOGGING_CONFIG['loggers'][''])},
    }
    if level:
        config['loggers']['']['level'] = level.upper()

    log_file = log_file or LOG_FILE
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        config['handlers']['file'] = {
            'level': 'DEBUG',
            'formatter': 'standard',
            'class': 'logging.FileHandler',
            'filename': log_file,
            'mode': 'a',
            'encoding': 'utf-8',
        }
        config['loggers']['']['handlers'] = ['default', 'file']
    return config


def validate_config():
    """Valida se as configurações estão corretas"""
    errors = []

    if ORACLE_CONFIG['max_cells'] < 1:
        errors.append(f"Limite do oráculo inválido: {ORACLE_CONFIG['max_cells']}")

    if REDUCTION_CONFIG['default_method'] not in REDUCTION_CONFIG['supported_methods']:
        errors.append(
            f"Método de redução desconhecido: {REDUCTION_CONFIG['default_method']} "
            f"(suportados: {REDUCTION_CONFIG['supported_methods']})"
        )

    if VERIFY_CONFIG['oracle_max_cells'] < 1:
        errors.append(f"Limite do oráculo no verify inválido: {VERIFY_CONFIG['oracle_max_cells']}")

    if VERIFY_CONFIG['n_jobs'] == 0:
        errors.append("N_JOBS não pode ser 0")

    low, high = VERIFY_CONFIG['default_value_range']
    if low > high:
        errors.append("Faixa de valores padrão inválida")

    if EXTERNAL_ENGINE_CONFIG['timeout_seconds'] <= 0:
        errors.append("Timeout do motor externo deve ser positivo")

    level = LOGGING_CONFIG['loggers']['']['level']
    if level not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
        errors.append(f"Nível de log inválido: {level}")

    return errors


if __name__ == "__main__":
    errors = validate_config()
    if errors:
        print("Erros de configuração encontrados:")
        for error in errors:
            print(f"  - {error}")
    else:
        print("Configurações validadas com sucesso!")
