#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Exception hierarchy shared by every module
"""


class LusztigError(ValueError):
    """Base class for all domain errors raised by the toolkit"""


class InvalidPartitionError(LusztigError):
    pass


class InvalidSymbolError(LusztigError):
    pass


class GroupMismatchError(LusztigError):
    pass


class NotSpecialError(LusztigError):
    pass


class InvalidSubsetError(LusztigError):
    pass


class RankBoundError(LusztigError):
    pass


class InvalidElementError(LusztigError):
    pass


class PreconditionError(LusztigError):
    pass


class NotBasicError(LusztigError):
    pass


class DescriptorError(LusztigError):
    pass


class NotFoundError(LusztigError):
    pass
