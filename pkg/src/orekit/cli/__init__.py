from .evaluate import ScriptEnvironment, execute
from .main import main
from .parser import ScriptParser, parse_script
from .pretty import script_to_text, statement_to_text
from .runner import run_script

__all__ = [
    'ScriptEnvironment',
    'execute',
    'main',
    'ScriptParser',
    'parse_script',
    'script_to_text',
    'statement_to_text',
    'run_script',
]
