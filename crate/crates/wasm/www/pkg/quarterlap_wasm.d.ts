/* tslint:disable */
/* eslint-disable */

export function compareProfiles(rgba: Uint8Array, width: number, height: number, row: number, iterations: number): Float32Array;

export function isotropyScore(kernel: string): number;

/**
 * Synthetic test image as RGBA (`step`, `corner`, `checker`, `noise`).
 */
export function patternRgba(name: string, size: number): Uint8Array;

/**
 * Filters canvas RGBA pixels; see [`demo::process`] for the modes.
 */
export function process(rgba: Uint8Array, width: number, height: number, mode: string, iterations: number, param: number): Uint8Array;

export function spectrumRgba(kernel: string, n: number): Uint8Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly compareProfiles: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly isotropyScore: (a: number, b: number) => [number, number, number];
    readonly patternRgba: (a: number, b: number, c: number) => [number, number, number, number];
    readonly process: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number, number];
    readonly spectrumRgba: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
