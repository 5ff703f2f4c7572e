/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_get_noisesummary_accept: (a: number) => number;
export const __wbg_get_noisesummary_iterations: (a: number) => number;
export const __wbg_get_noisesummary_ks_statistic: (a: number) => number;
export const __wbg_get_noisesummary_mean: (a: number) => number;
export const __wbg_get_noisesummary_p_value: (a: number) => number;
export const __wbg_get_noisesummary_variance: (a: number) => number;
export const __wbg_get_roundtrip_bit_accuracy: (a: number) => number;
export const __wbg_get_roundtrip_capacity_bytes: (a: number) => number;
export const __wbg_get_roundtrip_iterations: (a: number) => number;
export const __wbg_get_roundtrip_variance: (a: number) => number;
export const __wbg_get_trajectories_paths: (a: number) => number;
export const __wbg_noisesummary_free: (a: number, b: number) => void;
export const __wbg_roundtrip_free: (a: number, b: number) => void;
export const __wbg_set_noisesummary_accept: (a: number, b: number) => void;
export const __wbg_set_noisesummary_iterations: (a: number, b: number) => void;
export const __wbg_set_noisesummary_ks_statistic: (a: number, b: number) => void;
export const __wbg_set_noisesummary_mean: (a: number, b: number) => void;
export const __wbg_set_noisesummary_p_value: (a: number, b: number) => void;
export const __wbg_set_noisesummary_variance: (a: number, b: number) => void;
export const __wbg_set_roundtrip_bit_accuracy: (a: number, b: number) => void;
export const __wbg_set_roundtrip_capacity_bytes: (a: number, b: number) => void;
export const __wbg_set_roundtrip_iterations: (a: number, b: number) => void;
export const __wbg_set_roundtrip_variance: (a: number, b: number) => void;
export const __wbg_set_trajectories_paths: (a: number, b: number) => void;
export const __wbg_trajectories_free: (a: number, b: number) => void;
export const noise_summary: (a: number, b: number, c: number, d: number, e: number, f: number) => number;
export const noisesummary_densities: (a: number) => [number, number];
export const noisesummary_error: (a: number) => [number, number];
export const noisesummary_quantile_images: (a: number) => [number, number];
export const round_trip: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => number;
export const roundtrip_error: (a: number) => [number, number];
export const roundtrip_recovered: (a: number) => [number, number];
export const roundtrip_stego: (a: number) => [number, number];
export const trajectories: (a: number, b: number, c: number, d: number) => number;
export const trajectories_error: (a: number) => [number, number];
export const trajectories_states: (a: number) => [number, number];
export const trajectories_times: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
