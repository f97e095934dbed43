# -*- coding: utf-8 -*-
"""
Основний файл для запуску командного рядка crossclones.

Розбирає аргументи, налаштовує бюджети та логування і передає
керування обробникам команд. Звіти йдуть у stdout, повідомлення
про помилки (один рядок «error: …») та логи у stderr.
"""

import argparse
import sys
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from config import AppConfig
from exceptions import UsageError
from handlers.commands import CommandHandlers
from handlers.utils import CommandResult, error_line
from logger_config import LoggerMixin, main_logger, setup_logging

BUDGET_FLAGS = (
    "expansion_budget",
    "operation_budget",
    "selection_budget",
    "box_budget",
    "downset_budget",
    "oracle_budget",
)


class CliArgumentParser(argparse.ArgumentParser):
    """Парсер, що перетворює помилки argparse на UsageError замість виходу з кодом 2."""

    def error(self, message: str) -> None:
        raise UsageError(message)


class CrossCloneCli(LoggerMixin):
    """Основний клас командного рядка."""

    def __init__(self):
        self.parser = self._build_parser()

    def _build_parser(self) -> CliArgumentParser:
        parser = CliArgumentParser(
            prog="crossclones",
            description="Хрести, патерни та обмежені клони поліморфізмів",
        )
        parser.add_argument("-w", "--workspace", help="Файл робочого простору («-» для stdin)")
        parser.add_argument("--log-level", help="Рівень логування (DEBUG, INFO, WARNING, ...)")
        parser.add_argument("--log-file", help="Файл логів з ротацією")
        for flag in BUDGET_FLAGS:
            parser.add_argument(f"--{flag.replace('_', '-')}", dest=flag, type=int)

        commands = parser.add_subparsers(dest="command", metavar="COMMAND")
        commands.required = True

        commands.add_parser("show", help="Канонічний вигляд робочого простору")

        pattern = commands.add_parser("pattern", help="Патерн іменованого хреста")
        pattern.add_argument("cross")

        reconstruct = commands.add_parser("reconstruct", help="Відновлення параметрів з файлу кортежів")
        reconstruct.add_argument("tuples")

        encode = commands.add_parser("encode", help="Кодування I(Q) множини")
        encode.add_argument("set")

        for name, text in (("compare", "Порівняння Pol(Q2) ⊆ Pol(Q1)"),
                           ("kernel", "Рівні кодування дають рівні клони")):
            pair = commands.add_parser(name, help=text)
            pair.add_argument("first")
            pair.add_argument("second")
            pair.add_argument("-k", "--arity", type=int)

        pol = commands.add_parser("pol", help="Обмежений клон Pol_k(Q)")
        pol.add_argument("set")
        pol.add_argument("-k", "--arity", type=int)
        pol.add_argument("--list", action="store_true", help="Вивести всі таблиці")

        chain = commands.add_parser("chain", help="Спадний ω-ланцюг для γ")
        chain.add_argument("gamma")
        chain.add_argument("--max", type=int, required=True)

        count = commands.add_parser("count-downsets", help="Кількість нижніх конусів ящика")
        count.add_argument("--dims", type=int, required=True)
        count.add_argument("--bound", type=int, required=True)
        count.add_argument("--oracle", action="store_true", help="Звірити з перебором підмножин")

        catalogue = commands.add_parser("catalogue", help="Каталог конусів і підписів клонів")
        catalogue.add_argument("--bound", type=int, required=True)
        catalogue.add_argument("-k", "--arity", type=int)

        psi = commands.add_parser("psi", help="Обмежене наближення ψ(Pol Q)")
        psi.add_argument("set")
        psi.add_argument("--bound", type=int, required=True)
        psi.add_argument("-k", "--arity", type=int)

        return parser

    @staticmethod
    def _registry(handlers: CommandHandlers) -> Dict[str, Callable[[argparse.Namespace], CommandResult]]:
        return {
            "show": handlers.show_command,
            "pattern": handlers.pattern_command,
            "reconstruct": handlers.reconstruct_command,
            "encode": handlers.encode_command,
            "compare": handlers.compare_command,
            "kernel": handlers.kernel_command,
            "pol": handlers.pol_command,
            "chain": handlers.chain_command,
            "count-downsets": handlers.count_downsets_command,
            "catalogue": handlers.catalogue_command,
            "psi": handlers.psi_command,
        }

    @staticmethod
    def _settings(args: argparse.Namespace) -> AppConfig:
        overrides = {flag: getattr(args, flag) for flag in BUDGET_FLAGS if getattr(args, flag) is not None}
        if args.log_level is not None:
            overrides["log_level"] = args.log_level
        if args.log_file is not None:
            overrides["log_file"] = args.log_file
        try:
            return AppConfig(**overrides)
        except ValidationError as e:
            error = e.errors()[0]
            field = ".".join(str(part) for part in error["loc"])
            raise UsageError(f"{field}: {error['msg']}") from e

    def run(self, argv: Optional[List[str]] = None) -> int:
        """
        Виконує одну команду.

        Args:
            argv: Аргументи командного рядка (за замовчуванням sys.argv[1:])

        Returns:
            Код завершення: 0 успіх, 1 використання, 2 семантика, 3 бюджет
        """
        try:
            args = self.parser.parse_args(argv)
            settings = self._settings(args)
        except UsageError as e:
            print(error_line(str(e)), file=sys.stderr)
            return e.exit_code
        except SystemExit as e:
            # --help
            return e.code if isinstance(e.code, int) else 0

        if args.log_level is not None or args.log_file is not None:
            setup_logging(settings.log_level, settings.log_file)
        self.log_method_call("run", command=args.command)

        handlers = CommandHandlers(settings)
        code, lines = self._registry(handlers)[args.command](args)
        stream = sys.stdout if code == 0 else sys.stderr
        for line in lines:
            print(line, file=stream)
        return code


def main() -> None:
    """Основна функція додатку."""
    try:
        code = CrossCloneCli().run()
    except KeyboardInterrupt:
        main_logger.info("Отримано сигнал переривання від користувача")
        code = 1
    except Exception as e:
        main_logger.critical(f"Неочікувана помилка: {e}", exc_info=True)
        print(error_line(f"неочікувана помилка: {e}"), file=sys.stderr)
        code = 1
    sys.exit(code)


if __name__ == "__main__":
    main()
