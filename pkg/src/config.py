#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Runtime settings for the unipotent symbol toolkit
Values come from the environment, optionally seeded from a local .env file
"""

import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import pytz
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

DEFAULTS = {
    'LUSZTIG_MAX_WEYL_RANK': 8,
    'LUSZTIG_VERIFY_RANK': 4,
    'LUSZTIG_VERIFY_WEYL_N': 5,
    'LUSZTIG_WORKERS': 1,
}

DEFAULT_TIMEZONE = 'Asia/Kolkata'


@dataclass(frozen=True)
class Settings:
    max_weyl_rank: int = 8
    verify_rank: int = 4
    verify_weyl_n: int = 5
    workers: int = 1
    log_level: str = 'INFO'
    log_file: Optional[str] = None
    timezone: str = DEFAULT_TIMEZONE


def _get_int_env(var_name: str) -> int:
    """Read a positive integer, falling back to the default on bad input"""
    default = DEFAULTS[var_name]
    raw = os.getenv(var_name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"⚠️ {var_name}={raw!r} is not an integer, using {default}")
        return default
    if value < 1:
        logger.warning(f"⚠️ {var_name}={value} must be positive, using {default}")
        return default
    logger.debug(f"{var_name} loaded from environment: {value}")
    return value


def _get_timezone_env() -> str:
    raw = os.getenv('LUSZTIG_TIMEZONE')
    if not raw:
        return DEFAULT_TIMEZONE
    try:
        pytz.timezone(raw)
    except pytz.UnknownTimeZoneError:
        logger.warning(f"⚠️ LUSZTIG_TIMEZONE={raw!r} is not a known time zone, using {DEFAULT_TIMEZONE}")
        return DEFAULT_TIMEZONE
    return raw


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    load_dotenv()
    settings = Settings(
        max_weyl_rank=_get_int_env('LUSZTIG_MAX_WEYL_RANK'),
        verify_rank=_get_int_env('LUSZTIG_VERIFY_RANK'),
        verify_weyl_n=_get_int_env('LUSZTIG_VERIFY_WEYL_N'),
        workers=_get_int_env('LUSZTIG_WORKERS'),
        log_level=os.getenv('LUSZTIG_LOG_LEVEL', 'INFO').upper(),
        log_file=os.getenv('LUSZTIG_LOG_FILE') or None,
        timezone=_get_timezone_env(),
    )
    return settings


def configure_logging(settings: Optional[Settings] = None) -> None:
    settings = settings or get_settings()
    handlers = [logging.StreamHandler()]
    if settings.log_file:
        handlers.append(logging.FileHandler(settings.log_file))
    level = getattr(logging, settings.log_level, logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)
